#include "cpnsurf/minkowski.hpp"

#include <cmath>

namespace cpn {

ThetaField ThetaField::from_projector(const MatrixJet& p, int n, double tol) {
  if (p.dim() != n) throw Error("ThetaField: dimension mismatch");
  const CMatrix pv = p.value();
  const double idem = (pv * pv - pv).frobenius_norm();
  const double herm = hermiticity_residual(pv);
  const double tr = std::abs(pv.trace() - cplx{1.0, 0.0});
  if (idem > tol || herm > tol || tr > tol) {
    throw Error("ThetaField: input violates the rank-1 projector axioms");
  }
  ThetaField f;
  f.n = n;
  f.theta = kI * (p - (1.0 / n) * MatrixJet::identity(n, p.order()));
  return f;
}

MatrixJet TravelingWaveModel::theta_at(double x_plus, double x_minus,
                                       int order) const {
  const MatrixJet p = projector_at(x_plus, x_minus, order);
  return kI * (p - (1.0 / n) * MatrixJet::identity(n, order));
}

TravelingWaveModel rotating_wave_profile(double omega, double kappa,
                                         double lambda) {
  if (omega == 0.0) throw Error("rotating_wave_profile: omega must be nonzero");
  TravelingWaveModel model;
  model.n = 2;
  model.kappa = kappa;
  model.lambda = lambda;
  model.projector_at = [omega, kappa](double xp, double xm, int order) {
    const double s0 = xp + kappa * xm;
    const Jet1 c = Jet1::cosine(omega, s0, order);
    const Jet1 s = Jet1::sine(omega, s0, order);
    MatrixJet p(2, order);
    p.at(0, 0) = (c * c).compose_linear(kappa);
    p.at(0, 1) = (c * s).compose_linear(kappa);
    p.at(1, 0) = (c * s).compose_linear(kappa);
    p.at(1, 1) = (s * s).compose_linear(kappa);
    return p;
  };
  return model;
}

MatrixJet restrict_to_real_line(const MatrixJet& euclidean_jet, double kappa) {
  const int n = euclidean_jet.dim();
  const int d = euclidean_jet.order();
  MatrixJet r(n, d);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Jet2& src = euclidean_jet.at(i, j);
      Jet1 line = Jet1::constant(d, 0.0);
      for (int m = 0; m <= d; ++m) {
        cplx s{0.0, 0.0};
        for (int a = 0; a <= m; ++a) s += src.coeff(a, m - a);
        line.coeff(m) = s;
      }
      r.at(i, j) = line.compose_linear(kappa);
    }
  }
  return r;
}

double ThetaIdentityResiduals::max() const {
  return std::max({theta_sq, anticom, sandwich, bracket_left, bracket_right,
                   bracket_anticom});
}

ThetaIdentityResiduals theta_identities(const MatrixJet& theta, int n) {
  if (theta.order() < 1) throw Error("theta_identities: jet order must be >= 1");
  ThetaIdentityResiduals r;
  const CMatrix th = theta.value();
  const CMatrix id = CMatrix::identity(n);
  const CMatrix b = (1.0 - 2.0 / n) * id + (2.0 * kI) * th;

  r.theta_sq = (th * th - ((1.0 - n) / static_cast<double>(n) / n) * id -
                (kI * ((n - 2.0) / n)) * th)
                   .frobenius_norm();

  const CMatrix dth_list[2] = {theta.derivative(1, 0), theta.derivative(0, 1)};
  for (const CMatrix& dth : dth_list) {
    const CMatrix bracket = commutator(dth, th);
    r.anticom = std::max(
        r.anticom,
        (anticommutator(dth, th) - (kI * ((n - 2.0) / n)) * dth).frobenius_norm());
    r.sandwich = std::max(
        r.sandwich,
        (th * dth * th - ((n - 1.0) / static_cast<double>(n) / n) * dth)
            .frobenius_norm());
    // The bracket contracts with the involution factor from the left;
    // right multiplication flips the sign (the two anticommute).
    r.bracket_left =
        std::max(r.bracket_left, (b * bracket - kI * dth).frobenius_norm());
    r.bracket_right =
        std::max(r.bracket_right, (kI * (b * dth) - bracket).frobenius_norm());
    r.bracket_anticom = std::max(
        r.bracket_anticom, anticommutator(bracket, dth).frobenius_norm());
  }
  return r;
}

double minkowski_el_residual(const MatrixJet& theta) {
  if (theta.order() < 2) throw Error("minkowski_el_residual: order >= 2");
  return commutator(theta.derivative(1, 1), theta.value()).frobenius_norm();
}

MinkowskiTangents minkowski_weierstrass_tangents(const TravelingWaveModel& model,
                                                 double x_plus, double x_minus) {
  const MatrixJet theta = model.theta_at(x_plus, x_minus, 1);
  const CMatrix bracket = commutator(theta.derivative(1, 0), theta.value());
  MinkowskiTangents t;
  t.t_plus = -bracket;
  t.t_minus = model.kappa * bracket;
  return t;
}

double chi_parameter(const TravelingWaveModel& model, double x_plus,
                     double x_minus) {
  return model.lambda * (x_plus / (1.0 + model.lambda) -
                         model.kappa * x_minus / (1.0 - model.lambda));
}

namespace {
void require_real_lambda_no_pole(double lambda) {
  if (std::abs(lambda - 1.0) < 1e-9 || std::abs(lambda + 1.0) < 1e-9) {
    throw Error("spectral parameter pole at lambda = +-1");
  }
}

struct PointData {
  CMatrix theta, dtheta, b, bracket;
};

PointData point_data(const TravelingWaveModel& model, double x_plus,
                     double x_minus) {
  const MatrixJet theta = model.theta_at(x_plus, x_minus, 1);
  PointData d;
  d.theta = theta.value();
  d.dtheta = theta.derivative(1, 0);
  d.b = (1.0 - 2.0 / model.n) * CMatrix::identity(model.n) + (2.0 * kI) * d.theta;
  d.bracket = commutator(d.dtheta, d.theta);
  return d;
}
}  // namespace

CMatrix traveling_wavefunction(const TravelingWaveModel& model, double x_plus,
                               double x_minus) {
  require_real_lambda_no_pole(model.lambda);
  const PointData d = point_data(model, x_plus, x_minus);
  const double chi = chi_parameter(model, x_plus, x_minus);
  return d.b * matrix_exp((-2.0 * chi) * d.bracket);
}

TravelingLaxResiduals traveling_lax_residuals(const TravelingWaveModel& model,
                                              double x_plus, double x_minus) {
  require_real_lambda_no_pole(model.lambda);
  const MatrixJet theta = model.theta_at(x_plus, x_minus, 1);
  const CMatrix th = theta.value();
  const CMatrix dpth = theta.derivative(1, 0);
  const CMatrix dmth = theta.derivative(0, 1);
  const CMatrix a = commutator(dpth, th);
  const CMatrix b = (1.0 - 2.0 / model.n) * CMatrix::identity(model.n) +
                    (2.0 * kI) * th;
  const double chi = chi_parameter(model, x_plus, x_minus);
  const CMatrix e = matrix_exp((-2.0 * chi) * a);

  const double lam = model.lambda;
  const CMatrix phi = b * e;
  // d(+-) phi = 2i d(+-)theta E + B d(+-)(-2 chi) A E; A is constant on
  // traveling-wave EL solutions.
  const double dchi_p = lam / (1.0 + lam);
  const double dchi_m = -lam * model.kappa / (1.0 - lam);
  const CMatrix dphi_p = (2.0 * kI) * dpth * e + (-2.0 * dchi_p) * (b * (a * e));
  const CMatrix dphi_m = (2.0 * kI) * dmth * e + (-2.0 * dchi_m) * (b * (a * e));

  const CMatrix u1 = (-2.0 / (1.0 + lam)) * a;
  const CMatrix u2 = (-2.0 * model.kappa / (1.0 - lam)) * a;

  TravelingLaxResiduals r;
  r.plus = (dphi_p - u1 * phi).frobenius_norm();
  r.minus = (dphi_m - u2 * phi).frobenius_norm();
  return r;
}

ConjugatedGenerator conjugated_generator(const TravelingWaveModel& model,
                                         double x_plus, double x_minus) {
  require_real_lambda_no_pole(model.lambda);
  const PointData d = point_data(model, x_plus, x_minus);
  const double chi = chi_parameter(model, x_plus, x_minus);
  const CMatrix& a = d.bracket;

  ConjugatedGenerator g;
  const CMatrix phi = d.b * matrix_exp((-2.0 * chi) * a);
  g.lhs = phi.dagger() * a * phi;
  g.closed = -a;
  g.product_path = d.b * matrix_exp((-2.0 * chi) * a) * a * d.b *
                   matrix_exp((2.0 * chi) * a);
  g.single_exp = -(a * matrix_exp((4.0 * chi) * a));
  g.residual_conjugation = (g.lhs - g.closed).frobenius_norm();
  g.residual_product_path = (g.product_path - g.single_exp).frobenius_norm();
  g.exponential_factor_gap =
      (g.lhs - a * matrix_exp((4.0 * chi) * a)).frobenius_norm();
  g.norm_preservation = std::abs(g.lhs.frobenius_norm() - a.frobenius_norm());
  return g;
}

FgSample fg_surface_and_tangents(const TravelingWaveModel& model, double x_plus,
                                 double x_minus) {
  require_real_lambda_no_pole(model.lambda);
  const PointData d = point_data(model, x_plus, x_minus);
  const double chi = chi_parameter(model, x_plus, x_minus);
  const CMatrix phi = d.b * matrix_exp((-2.0 * chi) * d.bracket);
  const CMatrix g = phi.dagger() * d.bracket * phi;

  const double lam = model.lambda;
  const double kap = model.kappa;
  const double c1 = model.c1;
  const double prefactor = -2.0 * (c1 * x_plus + kap * c1 * x_minus - c1 +
                                   model.c2 + kap * model.c3);

  FgSample s;
  s.x = prefactor * g;
  s.t_plus_formula = (-2.0 * c1 / (1.0 + lam)) * g;
  s.t_minus_formula = (-2.0 * c1 * (1.0 + kap * lam / (1.0 - lam))) * g;
  // Literal derivatives of s.x: the conjugated generator is constant along
  // traveling-wave EL solutions, so only the prefactor differentiates.
  s.t_plus_derivative = (-2.0 * c1) * g;
  s.t_minus_derivative = (-2.0 * c1 * kap) * g;
  return s;
}

double tangent_ratio_residual(double kappa, double lambda) {
  return std::abs((1.0 + lambda) * (1.0 + kappa * lambda / (1.0 - lambda)) +
                  kappa);
}

std::vector<KappaScanRow> kappa_coincidence_scan(double omega, double lambda,
                                                 const std::vector<double>& kappa_grid,
                                                 double x_plus, double x_minus) {
  std::vector<KappaScanRow> rows;
  rows.reserve(kappa_grid.size());
  for (double kap : kappa_grid) {
    TravelingWaveModel model = rotating_wave_profile(omega, kap, lambda);
    KappaScanRow row;
    row.kappa = kap;
    row.lambda = lambda;
    row.ratio_residual = tangent_ratio_residual(kap, lambda);

    const FgSample fg = fg_surface_and_tangents(model, x_plus, x_minus);
    const MinkowskiTangents w =
        minkowski_weierstrass_tangents(model, x_plus, x_minus);
    // Least-squares scalar c1 matching the unit-c1 FG tangents to the
    // Weierstrass pair, then the residual of the fitted pair.
    double num = 0.0, den = 0.0;
    const CMatrix* t[2] = {&fg.t_plus_formula, &fg.t_minus_formula};
    const CMatrix* ww[2] = {&w.t_plus, &w.t_minus};
    for (int i = 0; i < 2; ++i) {
      for (int r2 = 0; r2 < model.n; ++r2)
        for (int c2 = 0; c2 < model.n; ++c2) {
          num += ((*t[i])(r2, c2) * std::conj((*ww[i])(r2, c2))).real();
          den += std::norm((*t[i])(r2, c2));
        }
    }
    const double fit = den > 0.0 ? num / den : 0.0;
    double resid = 0.0, scale = 0.0;
    for (int i = 0; i < 2; ++i) {
      resid += (fit * (*t[i]) - (*ww[i])).frobenius_norm() *
               (fit * (*t[i]) - (*ww[i])).frobenius_norm();
      scale += (*ww[i]).frobenius_norm() * (*ww[i]).frobenius_norm();
    }
    row.direction_residual = std::sqrt(resid) / std::max(1e-30, std::sqrt(scale));
    row.fitted_c1 = fit;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace cpn
