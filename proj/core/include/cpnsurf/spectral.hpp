#pragma once

#include "cpnsurf/surfaces.hpp"

namespace cpn {

/// Spectral-sector parameters. The Euclidean setting wants lambda purely
/// imaginary and away from the poles at +-1; tau is a positive real.
struct SpectralParams {
  cplx lambda{0.0, 0.5};
  double tau = 1.0;

  void validate() const;
};

/// Distance guard for the poles of the lambda-rational coefficients.
void require_no_pole(cplx lambda, double margin = 1e-9);

struct UMatrices {
  MatrixJet u1, u2;  // jets one order below the chain
};

/// U1 = 2/(1+lambda) [dP_k, P_k], U2 = 2/(1-lambda) [dbarP_k, P_k].
UMatrices u_matrices(const ProjectorChain& chain, int k, cplx lambda);

/// || dbar U1 - d U2 + [U1, U2] ||_F at the base point.
double zero_curvature_residual(const ProjectorChain& chain, int k, cplx lambda);

/// Phi_k = I + 4 lambda / (1-lambda)^2 sum_{j<k} P_j - 2/(1-lambda) P_k.
MatrixJet wavefunction(const ProjectorChain& chain, int k, cplx lambda);

/// Phi_k^{-1} = I - 4 lambda / (1+lambda)^2 sum_{j<k} P_j - 2/(1+lambda) P_k.
MatrixJet wavefunction_inverse(const ProjectorChain& chain, int k, cplx lambda);

struct LaxResiduals {
  double holomorphic = 0.0;      // || d Phi - U1 Phi ||
  double antiholomorphic = 0.0;  // || dbar Phi - U2 Phi ||
};
LaxResiduals lax_residuals(const ProjectorChain& chain, int k, cplx lambda);

/// Sym-Tafel immersion, closed form:
/// X^ST = -2 i tau / (1 - lambda^2) (P_k + 2 sum_{j<k} P_j - c_k I).
CMatrix sym_tafel_surface(const ProjectorChain& chain, int k,
                          const SpectralParams& params);

/// Dual route: -i tau (Phi^{-1} d_lambda Phi - 2 c_k/(1-lambda^2) I) with
/// the lambda-derivative taken analytically on the rational coefficients.
CMatrix sym_tafel_via_lambda_derivative(const ProjectorChain& chain, int k,
                                        const SpectralParams& params);

enum class StBranch { holomorphic, antiholomorphic };

/// Closed-form root sets of the idempotency-derived scalar conditions on
/// the spectral parameter.
std::vector<cplx> st_constraint_roots(StBranch branch, int n, double tau);

/// |LHS - 1| of the scalar condition the corresponding root set solves.
double st_scalar_condition_residual(StBranch branch, int n, double tau,
                                    cplx lambda);

struct MixedScanRow {
  double lambda_im = 0.0;
  double residual_matrix = 0.0;  // cubic constraint applied to X^ST
  double residual_sextic = 0.0;  // |printed degree-6 polynomial| (reported only)
  bool pole = false;
};

/// Scans the mixed-sheet constraint over lambda = i s. The matrix residual
/// is authoritative; the printed sextic coefficients are evaluated for
/// side-by-side reporting and never asserted.
std::vector<MixedScanRow> st_mixed_constraint_scan(const ProjectorChain& chain,
                                                   int k, double tau,
                                                   const std::vector<double>& s_grid);

struct StLambdaScanRow {
  double lambda_im = 0.0;
  double st_weierstrass_distance = 0.0;
  bool pole = false;
};

/// || X^ST(lambda) - X_k || over lambda = i s; minimum at lambda^2 = 1 - 2 tau.
std::vector<StLambdaScanRow> st_lambda_scan(const ProjectorChain& chain, int k,
                                            double tau,
                                            const std::vector<double>& s_grid);

/// Proportionality check of the top-sheet wave function closed form
/// ((1+lambda)/(1-lambda))^2 (I - 2/(1+lambda) P_{N-1}) against the generic
/// formula; returns the relative deviation after fitting a scalar ratio.
double top_sheet_wavefunction_proportionality(const ProjectorChain& chain,
                                              cplx lambda);

}  // namespace cpn
