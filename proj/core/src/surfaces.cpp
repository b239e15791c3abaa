#include "cpnsurf/surfaces.hpp"

#include <cmath>

namespace cpn {

MatrixJet weierstrass_jet(const ProjectorChain& chain, int k) {
  const int n = chain.n;
  const int d = chain.order();
  const double c = chain.c.at(k);
  MatrixJet x = (kI * c) * MatrixJet::identity(n, d);
  x -= kI * chain.proj(k);
  x -= (2.0 * kI) * chain.partial_sum(k);
  return x;
}

SurfaceSample weierstrass_surface(const ProjectorChain& chain, int k) {
  if (chain.order() < 2) throw Error("weierstrass_surface: jet order must be >= 2");
  const MatrixJet x = weierstrass_jet(chain, k);
  SurfaceSample s;
  s.k = k;
  s.base_point = chain.base_point;
  s.x = x.value();
  s.dx = x.derivative(1, 0);
  s.dbx = x.derivative(0, 1);
  s.d2x = x.derivative(2, 0);
  s.dbdx = x.derivative(1, 1);
  s.db2x = x.derivative(0, 2);
  return s;
}

CMatrix projector_from_surface(const CMatrix& x, int k, int n) {
  const double poly = matrix_poly_residual(x, minimal_poly_roots(k, n));
  if (poly > 1e-8) {
    throw Error("projector_from_surface: not a CP^{N-1} surface point (residual " +
                std::to_string(poly) + ")");
  }
  const double c = level_constant(k, n);
  const CMatrix id = CMatrix::identity(n);
  return x * x - (2.0 * kI * (c - 1.0)) * x - (c * (c - 2.0)) * id;
}

std::vector<cplx> minimal_poly_roots(int k, int n) {
  if (k < 0 || k >= n) throw Error("minimal_poly_roots: sheet index out of range");
  const double c = level_constant(k, n);
  if (k == 0) return {kI * c, kI * (c - 1.0)};
  if (k == n - 1) {
    // Anti-holomorphic sheet: the constraint carries the conjugate-model
    // constant c_0 = 1/n with flipped sign, which equals
    // {i(c_{n-1}-1), i(c_{n-1}-2)} for the level constant of sheet n-1.
    const double c0 = level_constant(0, n);
    return {-kI * c0, -kI * (c0 - 1.0)};
  }
  return {kI * c, kI * (c - 1.0), kI * (c - 2.0)};
}

double killing_closed_form(int k, int m, int n) {
  if (k < 0 || k >= n || m < 0 || m >= n)
    throw Error("killing_closed_form: sheet index out of range");
  if (m < k) std::swap(k, m);
  const double ck = level_constant(k, n);
  const double cm = level_constant(m, n);
  if (m == k) return 0.5 * n * ck * (2.0 - ck) - 0.5;
  return 0.5 * n * ck * (2.0 - cm);
}

TangentComparison tangents_two_ways(const ProjectorChain& chain, int k) {
  if (chain.order() < 1) throw Error("tangents_two_ways: jet order must be >= 1");
  TangentComparison t;
  const MatrixJet& p = chain.proj(k);
  const MatrixJet sum = chain.partial_sum(k);

  // Sum form: dX = -i dP_k - 2i sum_{j<k} dP_j.
  t.dx_sum = (-kI) * p.derivative(1, 0) - (2.0 * kI) * sum.derivative(1, 0);
  t.dbx_sum = (-kI) * p.derivative(0, 1) - (2.0 * kI) * sum.derivative(0, 1);

  // Commutator form: dX = -i [dP_k, P_k], dbarX = i [dbarP_k, P_k].
  const CMatrix pv = p.value();
  t.dx_comm = (-kI) * commutator(p.derivative(1, 0), pv);
  t.dbx_comm = kI * commutator(p.derivative(0, 1), pv);

  t.max_residual = std::max((t.dx_sum - t.dx_comm).frobenius_norm(),
                            (t.dbx_sum - t.dbx_comm).frobenius_norm());
  return t;
}

LinearDependenceResiduals linear_dependence_check(const ProjectorChain& chain) {
  const int n = chain.n;
  if (static_cast<int>(chain.p.size()) != n)
    throw Error("linear_dependence_check: needs all sheets");
  CMatrix alt(n);
  CMatrix plain(n);
  CMatrix weighted(n);
  for (int k = 0; k < n; ++k) {
    const CMatrix xk = weierstrass_jet(chain, k).value();
    if (k % 2 == 0)
      alt += xk;
    else
      alt -= xk;
    plain += xk;
    weighted += (2.0 * kI * (k - 0.5 * (n - 1))) * chain.proj(k).value();
  }
  LinearDependenceResiduals r;
  r.alternating = alt.frobenius_norm();
  r.weighted = (plain - weighted).frobenius_norm();
  return r;
}

double surface_el_residual(const SurfaceSample& s) {
  return commutator(s.dbdx, s.x).frobenius_norm();
}

double mixed_second_derivative_residual(const ProjectorChain& chain, int k) {
  if (chain.order() < 2) throw Error("mixed_second_derivative_residual: order >= 2");
  const MatrixJet& p = chain.proj(k);
  const CMatrix lhs = weierstrass_jet(chain, k).derivative(1, 1);
  const CMatrix rhs = kI * commutator(p.derivative(0, 1), p.derivative(1, 0));
  return (lhs - rhs).frobenius_norm();
}

TangentSelfResiduals tangent_self_identity(const SurfaceSample& s) {
  TangentSelfResiduals r;
  r.holomorphic = (s.dx - kI * commutator(s.dx, s.x)).frobenius_norm();
  r.antiholomorphic = (s.dbx + kI * commutator(s.dbx, s.x)).frobenius_norm();
  return r;
}

}  // namespace cpn
