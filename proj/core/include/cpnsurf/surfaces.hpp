#pragma once

#include "cpnsurf/chain.hpp"

namespace cpn {

/// Value and derivatives of the immersion X_k at a point, for any of the
/// three immersion formulas.
struct SurfaceSample {
  int k = 0;
  cplx base_point;
  CMatrix x;            // su(N) value
  CMatrix dx, dbx;      // d X, dbar X
  CMatrix d2x, dbdx, db2x;  // d^2 X, d dbar X, dbar^2 X
};

/// X_k = i c_k I - i P_k - 2i sum_{j<k} P_j at jet level.
MatrixJet weierstrass_jet(const ProjectorChain& chain, int k);

/// Evaluates the Weierstrass immersion and fills every derivative slot
/// from the chain jets.
SurfaceSample weierstrass_surface(const ProjectorChain& chain, int k);

/// Inverse map P_k = X_k^2 - 2i(c_k - 1) X_k - c_k(c_k - 2) I. Throws
/// "not a CP^{N-1} surface point" when x violates its minimal polynomial
/// beyond 1e-8.
CMatrix projector_from_surface(const CMatrix& x, int k, int n);

/// Roots of the minimal polynomial of X_k. Mixed sheets (1 <= k <= N-2)
/// get the cubic set {i c_k, i(c_k-1), i(c_k-2)}; the holomorphic sheet
/// the first two. The anti-holomorphic sheet satisfies the conjugate-level
/// quadratic with roots {-i c_0, -i(c_0 - 1)}, c_0 = 1/N, equal to
/// {i(c_{N-1}-1), i(c_{N-1}-2)}.
std::vector<cplx> minimal_poly_roots(int k, int n);

/// Closed-form Killing products: m > k gives N c_k (2 - c_m) / 2; the
/// diagonal gives N c_k (2 - c_k) / 2 - 1/2. Indices swap when m < k.
double killing_closed_form(int k, int m, int n);

struct TangentComparison {
  CMatrix dx_sum, dbx_sum;    // via the projector-sum expression
  CMatrix dx_comm, dbx_comm;  // via the commutator expression
  double max_residual = 0.0;
};

/// Tangents computed both ways; their agreement is the consistency of the
/// two tangent expressions.
TangentComparison tangents_two_ways(const ProjectorChain& chain, int k);

struct LinearDependenceResiduals {
  double alternating = 0.0;  // || sum (-1)^k X_k ||
  double weighted = 0.0;     // || sum X_k - 2i sum (k - (N-1)/2) P_k ||
};
LinearDependenceResiduals linear_dependence_check(const ProjectorChain& chain);

/// || [d dbar X_k, X_k] ||_F.
double surface_el_residual(const SurfaceSample& s);

/// || d dbar X_k - i [dbar P_k, d P_k] ||_F (the mixed-derivative identity
/// used in the surface EL proof).
double mixed_second_derivative_residual(const ProjectorChain& chain, int k);

struct TangentSelfResiduals {
  double holomorphic = 0.0;      // || dX - i[dX, X] ||
  double antiholomorphic = 0.0;  // || dbarX + i[dbarX, X] ||
};
TangentSelfResiduals tangent_self_identity(const SurfaceSample& s);

}  // namespace cpn
