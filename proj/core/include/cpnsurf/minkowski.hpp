#pragma once

#include "cpnsurf/matrix_jets.hpp"

#include <functional>

namespace cpn {

/// Anti-Hermitian traceless field theta = i(P - I/N) as a jet in the
/// light-cone coordinates (x+, x-).
struct ThetaField {
  int n = 0;
  MatrixJet theta;

  /// Validates that p is a rank-1 projector jet at order 0 before shifting.
  static ThetaField from_projector(const MatrixJet& p, int n, double tol = kSuTol);
};

/// Traveling-wave model: the projector depends on s = x+ + kappa x- only,
/// so d- theta = kappa d+ theta by construction. lambda is real in the
/// Minkowski setting.
struct TravelingWaveModel {
  int n = 0;
  double kappa = 0.0;
  double lambda = 0.0;
  double c1 = 1.0, c2 = 0.0, c3 = 0.0;
  /// P as a light-cone jet buildable at any point.
  std::function<MatrixJet(double x_plus, double x_minus, int order)> projector_at;

  MatrixJet theta_at(double x_plus, double x_minus, int order) const;
};

/// N = 2 reference solution: P(s) from f(s) = (cos(omega s), sin(omega s)).
/// Satisfies the traveling-wave EL equation exactly ([P'', P] = 0).
TravelingWaveModel rotating_wave_profile(double omega, double kappa = -0.6,
                                         double lambda = 0.5);

/// Collapses a Euclidean (xi, xibar) jet onto the real line xi = xi0 + s and
/// re-parametrizes by s = x+ + kappa x-; used to recycle Euclidean chains as
/// light-cone theta fields.
MatrixJet restrict_to_real_line(const MatrixJet& euclidean_jet, double kappa);

/// Residuals of the quadratic/anticommutator/sandwich identities and the
/// bracket identities of the theta field, for both light-cone derivatives.
struct ThetaIdentityResiduals {
  double theta_sq = 0.0;       // theta^2 = (1-N)/N^2 I + i(N-2)/N theta
  double anticom = 0.0;        // {d theta, theta} = i(N-2)/N d theta
  double sandwich = 0.0;       // theta d theta theta = (N-1)/N^2 d theta
  double bracket_left = 0.0;   // (1 + 2i theta - 2/N)[d theta, theta] = i d theta
  double bracket_right = 0.0;  // i(1 + 2i theta - 2/N) d theta = [d theta, theta]
  double bracket_anticom = 0.0;  // {[d theta, theta], d theta} = 0
  double max() const;
};
ThetaIdentityResiduals theta_identities(const MatrixJet& theta, int n);

/// EL residual [d- d+ theta, theta] at the base point.
double minkowski_el_residual(const MatrixJet& theta);

struct MinkowskiTangents {
  CMatrix t_plus;   // -[d+ theta, theta]
  CMatrix t_minus;  // kappa [d+ theta, theta]
};
MinkowskiTangents minkowski_weierstrass_tangents(const TravelingWaveModel& model,
                                                 double x_plus, double x_minus);

/// chi = lambda (x+/(1+lambda) - kappa x-/(1-lambda)).
double chi_parameter(const TravelingWaveModel& model, double x_plus,
                     double x_minus);

/// Traveling-wave wave function
/// phi = (I + 2i theta - 2/N) exp(-2 chi [d+ theta, theta]).
/// The exponent's sign is pinned by the linear system itself: this phi
/// satisfies d+ phi = U1 phi and d- phi = U2 phi with
/// U1 = -2/(1+lambda) [d+ theta, theta], U2 = -2 kappa/(1-lambda) [d+ theta, theta].
CMatrix traveling_wavefunction(const TravelingWaveModel& model, double x_plus,
                               double x_minus);

struct TravelingLaxResiduals {
  double plus = 0.0;   // || d+ phi - U1 phi ||
  double minus = 0.0;  // || d- phi - U2 phi ||
};
/// Analytic derivatives of phi (the bracket is constant on traveling-wave
/// EL solutions).
TravelingLaxResiduals traveling_lax_residuals(const TravelingWaveModel& model,
                                              double x_plus, double x_minus);

/// Both evaluation routes for the conjugated generator phi^dagger A phi,
/// A = [d+ theta, theta].
struct ConjugatedGenerator {
  CMatrix lhs;            // phi^dagger A phi by products and exponentials
  CMatrix closed;         // -A: conjugation collapses, [A, exp(c A)] = 0
  CMatrix product_path;   // B exp(-2 chi A) A B exp(2 chi A), three exponentials
  CMatrix single_exp;     // -A exp(4 chi A), one exponential
  double residual_conjugation = 0.0;   // || lhs - closed ||
  double residual_product_path = 0.0;  // || product_path - single_exp ||
  double exponential_factor_gap = 0.0; // || lhs - A exp(4 chi A) || (reported)
  double norm_preservation = 0.0;      // | ||lhs|| - ||A|| |
};
ConjugatedGenerator conjugated_generator(const TravelingWaveModel& model,
                                         double x_plus, double x_minus);

/// Fokas-Gel'fand surface for the conformal symmetry f = c1 x+ + c2,
/// g = c1 x- + c3, with both tangent readings: the stated prefactor forms
/// and the literal derivatives of the integrated surface.
struct FgSample {
  CMatrix x;
  CMatrix t_plus_formula, t_minus_formula;
  CMatrix t_plus_derivative, t_minus_derivative;
};
FgSample fg_surface_and_tangents(const TravelingWaveModel& model, double x_plus,
                                 double x_minus);

inline double kappa_star(double lambda) {
  return (lambda * lambda - 1.0) / (lambda * lambda + 1.0);
}

/// | (1+lambda)(1 + kappa lambda/(1-lambda)) + kappa |: the mismatch of the
/// FG and Weierstrass tangent ratios; vanishes exactly at kappa_star.
double tangent_ratio_residual(double kappa, double lambda);

struct KappaScanRow {
  double kappa = 0.0;
  double lambda = 0.0;
  double ratio_residual = 0.0;
  double direction_residual = 0.0;  // post-fit tangent-pair discrepancy
  double fitted_c1 = 0.0;
};
std::vector<KappaScanRow> kappa_coincidence_scan(double omega, double lambda,
                                                 const std::vector<double>& kappa_grid,
                                                 double x_plus = 0.3,
                                                 double x_minus = -0.2);

}  // namespace cpn
