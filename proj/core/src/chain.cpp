#include "cpnsurf/chain.hpp"

#include <algorithm>
#include <cmath>

namespace cpn {

int HolomorphicCurve::max_degree() const {
  size_t d = 0;
  for (const auto& c : coeffs) d = std::max(d, c.size());
  return d == 0 ? 0 : static_cast<int>(d) - 1;
}

std::vector<cplx> HolomorphicCurve::eval(cplx xi) const {
  std::vector<cplx> v(n, cplx{0.0, 0.0});
  for (int c = 0; c < n; ++c) {
    cplx acc{0.0, 0.0};
    for (auto it = coeffs[c].rbegin(); it != coeffs[c].rend(); ++it)
      acc = acc * xi + *it;
    v[c] = acc;
  }
  return v;
}

double HolomorphicCurve::norm_at(cplx xi) const {
  double s = 0.0;
  for (const cplx& v : eval(xi)) s += std::norm(v);
  return std::sqrt(s);
}

VectorJet HolomorphicCurve::seed_jet(cplx xi0, int order) const {
  const Jet2 xi = Jet2::seed(xi0, Var::xi, order);
  VectorJet f(n, order);
  for (int c = 0; c < n; ++c) {
    Jet2 acc = Jet2::constant(0.0, order);
    for (auto it = coeffs[c].rbegin(); it != coeffs[c].rend(); ++it)
      acc = acc * xi + Jet2::constant(*it, order);
    f.at(c) = acc;
  }
  return f;
}

HolomorphicCurve veronese_curve(int n) {
  if (n < 2) throw Error("veronese_curve: n must be >= 2");
  if (n > kMaxDim) throw Error("veronese_curve: n exceeds dimension cap");
  HolomorphicCurve curve;
  curve.n = n;
  curve.coeffs.resize(n);
  for (int j = 0; j < n; ++j) {
    curve.coeffs[j].assign(j + 1, cplx{0.0, 0.0});
    curve.coeffs[j][j] = std::sqrt(binomial(n - 1, j));
  }
  return curve;
}

MatrixJet ProjectorChain::partial_sum(int k) const {
  MatrixJet s(n, order());
  for (int j = 0; j < k; ++j) s += p[j];
  return s;
}

MatrixJet projector_from_vector(const VectorJet& f) {
  const Jet2 nsq = f.norm_sq();
  if (std::abs(nsq.value()) <= 1e-12)
    throw Error("projector_from_vector: singular normalization");
  return nsq.reciprocal() * f.outer_self();
}

VectorJet raise_step(const VectorJet& f, const MatrixJet& p) {
  if (f.order() < 1) throw Error("raise: insufficient jet order");
  const int d = f.order() - 1;
  const VectorJet df = f.deriv_xi();
  return df - p.truncated(d) * df;
}

VectorJet lower_step(const VectorJet& f, const MatrixJet& p) {
  if (f.order() < 1) throw Error("lower: insufficient jet order");
  const int d = f.order() - 1;
  const VectorJet dbf = f.deriv_xibar();
  return dbf - p.truncated(d) * dbf;
}

ProjectorChain build_chain_from_seed(const VectorJet& f0, cplx xi0, int order,
                                     int sheets) {
  const int n = f0.dim();
  ProjectorChain chain;
  chain.n = n;
  chain.base_point = xi0;
  chain.c.resize(sheets);
  for (int k = 0; k < sheets; ++k) chain.c[k] = level_constant(k, n);

  VectorJet f = f0;
  for (int k = 0; k < sheets; ++k) {
    const double fnorm = std::sqrt(std::abs(f.norm_sq().value()));
    if (fnorm <= 1e-8) {
      throw Error("build_chain: curve not full rank (||f_" + std::to_string(k) +
                  "|| = " + std::to_string(fnorm) + ")");
    }
    MatrixJet p = projector_from_vector(f);
    chain.p.push_back(p.truncated(order));
    if (k + 1 < sheets) f = raise_step(f, p);
  }
  return chain;
}

ProjectorChain build_chain(const HolomorphicCurve& curve, cplx xi0, int order) {
  if (curve.n < 2) throw Error("build_chain: n must be >= 2");
  if (curve.norm_at(xi0) <= 1e-12)
    throw Error("build_chain: seed vanishes at base point, resample");
  const int seed_order = order + curve.n - 1;
  VectorJet f0 = curve.seed_jet(xi0, seed_order);
  ProjectorChain chain = build_chain_from_seed(f0, xi0, order, curve.n);

  // Termination: one more raise past the top sheet must vanish.
  VectorJet f = f0;
  for (int k = 0; k + 1 < curve.n; ++k) f = raise_step(f, projector_from_vector(f));
  const MatrixJet p_top = projector_from_vector(f);
  const VectorJet beyond = raise_step(f, p_top);
  double num = 0.0;
  for (int i = 0; i < curve.n; ++i) num += std::norm(beyond.at(i).value());
  const double den = std::max(1.0, std::sqrt(std::abs(f.norm_sq().value())));
  if (std::sqrt(num) / den > 1e-8) {
    throw Error("build_chain: curve not full rank (chain does not terminate)");
  }
  return chain;
}

double el_residual(const ProjectorChain& chain, int k) {
  if (chain.order() < 2) throw Error("el_residual: jet order must be >= 2");
  const MatrixJet& p = chain.proj(k);
  const CMatrix ddbar_p = p.derivative(1, 1);
  return commutator(ddbar_p, p.value()).frobenius_norm();
}

double conservation_residual(const ProjectorChain& chain, int k) {
  if (chain.order() < 2) throw Error("conservation_residual: jet order must be >= 2");
  const MatrixJet& p = chain.proj(k);
  const int d1 = chain.order() - 1;
  const MatrixJet c1 = commutator(p.deriv_xibar(), p.truncated(d1));
  const MatrixJet c2 = commutator(p.deriv_xi(), p.truncated(d1));
  const CMatrix total = c1.derivative(1, 0) + c2.derivative(0, 1);
  return total.frobenius_norm();
}

double lagrangian_density(const ProjectorChain& chain, int k) {
  if (chain.order() < 1) throw Error("lagrangian_density: jet order must be >= 1");
  const MatrixJet& p = chain.proj(k);
  const cplx l = (p.derivative(1, 0) * p.derivative(0, 1)).trace();
  if (std::abs(l.imag()) > 1e-10)
    throw Error("lagrangian_density: non-real value");
  return l.real();
}

double AxiomResiduals::max() const {
  return std::max({idempotent, hermitian, unit_trace, orthogonal, complete});
}

AxiomResiduals projector_axiom_residuals(const ProjectorChain& chain) {
  AxiomResiduals r;
  const int n = chain.n;
  CMatrix sum(n);
  for (int k = 0; k < static_cast<int>(chain.p.size()); ++k) {
    const CMatrix pk = chain.proj(k).value();
    sum += pk;
    r.idempotent = std::max(r.idempotent, (pk * pk - pk).frobenius_norm());
    r.hermitian = std::max(r.hermitian, hermiticity_residual(pk));
    r.unit_trace = std::max(r.unit_trace, std::abs(pk.trace() - cplx{1.0, 0.0}));
    for (int l = 0; l < static_cast<int>(chain.p.size()); ++l) {
      if (l == k) continue;
      const CMatrix pl = chain.proj(l).value();
      r.orthogonal = std::max(r.orthogonal, (pl * pk).frobenius_norm());
    }
  }
  if (static_cast<int>(chain.p.size()) == n) {
    r.complete = (sum - CMatrix::identity(n)).frobenius_norm();
  }
  return r;
}

}  // namespace cpn
