#include "cpnsurf/spectral.hpp"

#include <cmath>

namespace cpn {

void SpectralParams::validate() const {
  if (!(tau > 0.0)) throw Error("SpectralParams: tau must be positive");
  require_no_pole(lambda);
  if (std::abs(lambda.real()) > 1e-9) {
    throw Error("SpectralParams: lambda must be purely imaginary in the "
                "Euclidean setting");
  }
}

void require_no_pole(cplx lambda, double margin) {
  if (std::abs(lambda - cplx{1.0, 0.0}) < margin ||
      std::abs(lambda + cplx{1.0, 0.0}) < margin) {
    throw Error("spectral parameter pole at lambda = +-1");
  }
}

UMatrices u_matrices(const ProjectorChain& chain, int k, cplx lambda) {
  require_no_pole(lambda);
  if (chain.order() < 1) throw Error("u_matrices: jet order must be >= 1");
  const MatrixJet& p = chain.proj(k);
  const int d = chain.order() - 1;
  const MatrixJet pt = p.truncated(d);
  UMatrices u;
  u.u1 = (2.0 / (1.0 + lambda)) * commutator(p.deriv_xi(), pt);
  u.u2 = (2.0 / (1.0 - lambda)) * commutator(p.deriv_xibar(), pt);
  return u;
}

double zero_curvature_residual(const ProjectorChain& chain, int k, cplx lambda) {
  if (chain.order() < 2) throw Error("zero_curvature_residual: order >= 2");
  const UMatrices u = u_matrices(chain, k, lambda);
  const CMatrix z = u.u1.derivative(0, 1) - u.u2.derivative(1, 0) +
                    commutator(u.u1.value(), u.u2.value());
  return z.frobenius_norm();
}

MatrixJet wavefunction(const ProjectorChain& chain, int k, cplx lambda) {
  require_no_pole(lambda);
  const cplx a = 4.0 * lambda / ((1.0 - lambda) * (1.0 - lambda));
  const cplx b = 2.0 / (1.0 - lambda);
  MatrixJet phi = MatrixJet::identity(chain.n, chain.order());
  phi += a * chain.partial_sum(k);
  phi -= b * chain.proj(k);
  return phi;
}

MatrixJet wavefunction_inverse(const ProjectorChain& chain, int k, cplx lambda) {
  require_no_pole(lambda);
  const cplx a = 4.0 * lambda / ((1.0 + lambda) * (1.0 + lambda));
  const cplx b = 2.0 / (1.0 + lambda);
  MatrixJet phi = MatrixJet::identity(chain.n, chain.order());
  phi -= a * chain.partial_sum(k);
  phi -= b * chain.proj(k);
  return phi;
}

LaxResiduals lax_residuals(const ProjectorChain& chain, int k, cplx lambda) {
  const MatrixJet phi = wavefunction(chain, k, lambda);
  const UMatrices u = u_matrices(chain, k, lambda);
  const CMatrix phi0 = phi.value();
  LaxResiduals r;
  r.holomorphic = (phi.derivative(1, 0) - u.u1.value() * phi0).frobenius_norm();
  r.antiholomorphic =
      (phi.derivative(0, 1) - u.u2.value() * phi0).frobenius_norm();
  return r;
}

CMatrix sym_tafel_surface(const ProjectorChain& chain, int k,
                          const SpectralParams& params) {
  require_no_pole(params.lambda);
  const cplx lam2 = params.lambda * params.lambda;
  const double c = chain.c.at(k);
  const CMatrix bracket = chain.proj(k).value() +
                          2.0 * chain.partial_sum(k).value() -
                          c * CMatrix::identity(chain.n);
  return (-2.0 * kI * params.tau / (1.0 - lam2)) * bracket;
}

CMatrix sym_tafel_via_lambda_derivative(const ProjectorChain& chain, int k,
                                        const SpectralParams& params) {
  require_no_pole(params.lambda);
  const cplx lam = params.lambda;
  const cplx one_m = 1.0 - lam;
  const cplx lam2 = lam * lam;
  // d/dlambda of the rational coefficients of Phi_k.
  const cplx da = 4.0 * (1.0 + lam) / (one_m * one_m * one_m);
  const cplx db = 2.0 / (one_m * one_m);
  const CMatrix dphi = da * chain.partial_sum(k).value() - db * chain.proj(k).value();
  const CMatrix phi_inv = wavefunction_inverse(chain, k, lam).value();
  const double c = chain.c.at(k);
  const CMatrix inner =
      phi_inv * dphi - (2.0 * c / (1.0 - lam2)) * CMatrix::identity(chain.n);
  return (-kI * params.tau) * inner;
}

std::vector<cplx> st_constraint_roots(StBranch branch, int n, double tau) {
  if (n < 2) throw Error("st_constraint_roots: n must be >= 2");
  if (!(tau > 0.0)) throw Error("st_constraint_roots: tau must be positive");
  std::vector<cplx> roots;
  if (branch == StBranch::holomorphic) {
    const double c0 = level_constant(0, n);
    const cplx r1 = std::sqrt(cplx{1.0 - 2.0 * tau * n * (c0 - 1.0), 0.0});
    const cplx r2 = std::sqrt(
        cplx{(n - 1.0 + 2.0 * tau * n * (c0 - 1.0)) / (n - 1.0), 0.0});
    roots = {r1, -r1, r2, -r2};
  } else {
    const double c = level_constant(n - 1, n);
    const double disc =
        tau * tau * n * n *
        (4.0 * (n - 1.0) * (c + 1.0) * (c + 1.0) + n * n * (c - 1.0) * (c - 1.0));
    const double base = n - 1.0 + tau * n * n * (c - 1.0);
    const cplx r1 = std::sqrt(cplx{(base + std::sqrt(disc)) / (n - 1.0), 0.0});
    const cplx r2 = std::sqrt(cplx{(base - std::sqrt(disc)) / (n - 1.0), 0.0});
    roots = {r1, -r1, r2, -r2};
  }
  return roots;
}

double st_scalar_condition_residual(StBranch branch, int n, double tau,
                                    cplx lambda) {
  const cplx lam2 = lambda * lambda;
  cplx num, den;
  if (branch == StBranch::holomorphic) {
    const double c0 = level_constant(0, n);
    num = (1.0 - 2.0 * c0 * tau * n - lam2) *
          (1.0 - lam2 - static_cast<double>(n) * (1.0 + 2.0 * c0 * tau - lam2));
    den = 2.0 * tau * n * (2.0 - n) * (lam2 - 1.0) +
          4.0 * tau * tau * n * n * (2.0 * c0 - 1.0);
  } else {
    const double c = level_constant(n - 1, n);
    const cplx u = 1.0 - lam2;
    num = u * u * (1.0 - n) +
          2.0 * tau * n * n * ((2.0 - c) * u + 2.0 * tau * (c + 2.0) * (c + 2.0));
    den = 2.0 * tau * n * n * (1.0 + tau * (6.0 + 4.0 * c) - lam2);
  }
  // The condition is num/den = 1; compared as num - den = 0 so the N = 2
  // holomorphic case (where den vanishes identically) stays well defined.
  return std::abs(num - den) / std::max(1.0, std::abs(den));
}

std::vector<MixedScanRow> st_mixed_constraint_scan(const ProjectorChain& chain,
                                                   int k, double tau,
                                                   const std::vector<double>& s_grid) {
  if (k < 1 || k > chain.n - 2)
    throw Error("st_mixed_constraint_scan: sheet is not mixed");
  const double c = chain.c.at(k);
  const cplx a4 = c * (cplx{8.0, -6.0} + cplx{6.0, 9.0} * c -
                       3.0 * cplx{2.0, 1.0} * c * c) -
                  4.0;
  const cplx a2 = cplx{8.0, -12.0} +
                  c * cplx{2.0, 1.0} *
                      (cplx{2.0, 20.0} - cplx{9.0, 6.0} * c + cplx{3.0, -6.0} * c * c);
  const cplx a0 = cplx{4.0, 12.0} - cplx{16.0, 38.0} * c + cplx{38.0, 15.0} * c * c +
                  cplx{2.0, 11.0} * c * c * c;
  const std::vector<cplx> roots = minimal_poly_roots(k, chain.n);

  std::vector<MixedScanRow> rows;
  rows.reserve(s_grid.size());
  for (double s : s_grid) {
    MixedScanRow row;
    row.lambda_im = s;
    const cplx lam{0.0, s};
    if (std::abs(lam - cplx{1.0, 0.0}) < 0.05 ||
        std::abs(lam + cplx{1.0, 0.0}) < 0.05) {
      row.pole = true;
      rows.push_back(row);
      continue;
    }
    SpectralParams params{lam, tau};
    const CMatrix xst = sym_tafel_surface(chain, k, params);
    row.residual_matrix = matrix_poly_residual(xst, roots);
    const cplx lam2 = lam * lam;
    const cplx sextic = kI * c * (c - 1.0) * (c - 2.0) * lam2 * lam2 * lam2 +
                        a4 * lam2 * lam2 + a2 * lam2 + a0;
    row.residual_sextic = std::abs(sextic);
    rows.push_back(row);
  }
  return rows;
}

std::vector<StLambdaScanRow> st_lambda_scan(const ProjectorChain& chain, int k,
                                            double tau,
                                            const std::vector<double>& s_grid) {
  const CMatrix xk = weierstrass_jet(chain, k).value();
  std::vector<StLambdaScanRow> rows;
  rows.reserve(s_grid.size());
  for (double s : s_grid) {
    StLambdaScanRow row;
    row.lambda_im = s;
    const cplx lam{0.0, s};
    if (std::abs(lam - cplx{1.0, 0.0}) < 0.05 ||
        std::abs(lam + cplx{1.0, 0.0}) < 0.05) {
      row.pole = true;
      rows.push_back(row);
      continue;
    }
    SpectralParams params{lam, tau};
    row.st_weierstrass_distance =
        (sym_tafel_surface(chain, k, params) - xk).frobenius_norm();
    rows.push_back(row);
  }
  return rows;
}

double top_sheet_wavefunction_proportionality(const ProjectorChain& chain,
                                              cplx lambda) {
  require_no_pole(lambda);
  const int n = chain.n;
  const CMatrix generic = wavefunction(chain, n - 1, lambda).value();
  const cplx pref = (1.0 + lambda) / (1.0 - lambda);
  const CMatrix closed =
      (pref * pref) * (CMatrix::identity(n) -
                       (2.0 / (1.0 + lambda)) * chain.proj(n - 1).value());
  // Least-squares scalar ratio r minimizing || generic - r closed ||_F.
  cplx num{0.0, 0.0};
  double den = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      num += std::conj(closed(i, j)) * generic(i, j);
      den += std::norm(closed(i, j));
    }
  const cplx r = num / den;
  return (generic - r * closed).frobenius_norm() /
         std::max(1.0, generic.frobenius_norm());
}

}  // namespace cpn
