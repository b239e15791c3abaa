#pragma once

#include "cpnsurf/matrix_jets.hpp"

namespace cpn {

/// Polynomial curve f0(xi) in C^N seeding the projector chain.
struct HolomorphicCurve {
  int n = 0;
  // coeffs[c][p] multiplies xi^p in component c.
  std::vector<std::vector<cplx>> coeffs;

  int max_degree() const;
  std::vector<cplx> eval(cplx xi) const;
  /// ||f0(xi)||; chain construction rejects points where this is < 1e-12.
  double norm_at(cplx xi) const;
  /// Component jets seeded in the holomorphic variable.
  VectorJet seed_jet(cplx xi0, int order) const;
};

/// Canonical finite-action family: components sqrt(C(n-1, j)) xi^j.
HolomorphicCurve veronese_curve(int n);

/// The full chain of rank-1 projector jets P_0..P_{N-1} at a base point,
/// with the constants c_k = (1+2k)/N.
struct ProjectorChain {
  int n = 0;
  cplx base_point;
  std::vector<MatrixJet> p;
  std::vector<double> c;

  const MatrixJet& proj(int k) const { return p.at(k); }
  int order() const { return p.empty() ? -1 : p.front().order(); }

  /// Sum_{j<k} P_j at jet level (empty sum for k = 0).
  MatrixJet partial_sum(int k) const;
};

inline double level_constant(int k, int n) { return (1.0 + 2.0 * k) / n; }

/// P = f (x) f^dagger / (f^dagger . f). Throws "singular normalization"
/// when the norm's constant term vanishes.
MatrixJet projector_from_vector(const VectorJet& f);

/// Raising map (I - P) d f; the jet order drops by one. P must be the
/// projector of f at matching order.
VectorJet raise_step(const VectorJet& f, const MatrixJet& p);
/// Lowering map (I - P) dbar f.
VectorJet lower_step(const VectorJet& f, const MatrixJet& p);

/// Builds the chain by iterating the raising map from f_0. Seeds f_0 at
/// order d + N - 1 (each raise consumes one order) and truncates all
/// projectors to order d. Verifies termination: raising f_{N-1} must give
/// the zero vector (relative residual <= 1e-8), else the curve is not
/// full rank.
ProjectorChain build_chain(const HolomorphicCurve& curve, cplx xi0, int order = 3);

/// Same construction from an arbitrary seed jet (used for broken-model
/// negative controls; no termination check beyond normalization).
ProjectorChain build_chain_from_seed(const VectorJet& f0, cplx xi0, int order,
                                     int sheets);

/// Frobenius norm of [d dbar P_k, P_k] at the base point.
double el_residual(const ProjectorChain& chain, int k);

/// || d[dbar P_k, P_k] + dbar[d P_k, P_k] ||_F, expanded through the jets.
double conservation_residual(const ProjectorChain& chain, int k);

/// tr[dP_k dbarP_k]; real and nonnegative on these models.
double lagrangian_density(const ProjectorChain& chain, int k);

/// Order-0 residuals of the projector axioms, maximized over the chain:
/// idempotency, Hermiticity, unit trace, mutual orthogonality, completeness.
struct AxiomResiduals {
  double idempotent = 0.0;
  double hermitian = 0.0;
  double unit_trace = 0.0;
  double orthogonal = 0.0;
  double complete = 0.0;
  double max() const;
};
AxiomResiduals projector_axiom_residuals(const ProjectorChain& chain);

}  // namespace cpn
