#include "cpnsurf/matrix_jets.hpp"

namespace cpn {

namespace {
void require_compatible(int na, int oa, int nb, int ob, const char* op) {
  if (na != nb) throw Error(std::string(op) + ": dimension mismatch");
  if (oa != ob) throw Error(std::string(op) + ": jet order mismatch");
}
}  // namespace

MatrixJet::MatrixJet(int n, int order)
    : n_(n), order_(order),
      e_(static_cast<size_t>(n) * n, Jet2(order, cplx{0.0, 0.0})) {
  if (n < 1 || n > kMaxDim) throw Error("MatrixJet: bad dimension");
}

MatrixJet MatrixJet::identity(int n, int order) {
  MatrixJet m(n, order);
  for (int i = 0; i < n; ++i) m.at(i, i) = Jet2::constant(1.0, order);
  return m;
}

CMatrix MatrixJet::derivative(int a, int b) const {
  CMatrix m(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = at(i, j).derivative(a, b);
  return m;
}

MatrixJet& MatrixJet::operator+=(const MatrixJet& o) {
  require_compatible(n_, order_, o.n_, o.order_, "matrix jet add");
  for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

MatrixJet& MatrixJet::operator-=(const MatrixJet& o) {
  require_compatible(n_, order_, o.n_, o.order_, "matrix jet sub");
  for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

MatrixJet MatrixJet::dagger() const {
  MatrixJet r(n_, order_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(i, j) = at(j, i).conjugate();
  return r;
}

MatrixJet MatrixJet::deriv_xi() const {
  MatrixJet r(n_, order_ - 1);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(i, j) = at(i, j).deriv_xi();
  return r;
}

MatrixJet MatrixJet::deriv_xibar() const {
  MatrixJet r(n_, order_ - 1);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(i, j) = at(i, j).deriv_xibar();
  return r;
}

MatrixJet MatrixJet::truncated(int new_order) const {
  MatrixJet r(n_, new_order);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(i, j) = at(i, j).truncated(new_order);
  return r;
}

Jet2 MatrixJet::trace() const {
  Jet2 t(order_, 0.0);
  for (int i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

MatrixJet operator+(const MatrixJet& a, const MatrixJet& b) {
  MatrixJet r = a;
  r += b;
  return r;
}

MatrixJet operator-(const MatrixJet& a, const MatrixJet& b) {
  MatrixJet r = a;
  r -= b;
  return r;
}

MatrixJet operator*(const MatrixJet& a, const MatrixJet& b) {
  require_compatible(a.dim(), a.order(), b.dim(), b.order(), "matrix jet multiply");
  const int n = a.dim();
  MatrixJet r(n, a.order());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Jet2 s(a.order(), 0.0);
      for (int k = 0; k < n; ++k) s += a.at(i, k) * b.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

MatrixJet operator*(const Jet2& s, const MatrixJet& a) {
  MatrixJet r(a.dim(), a.order());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r.at(i, j) = s * a.at(i, j);
  return r;
}

MatrixJet operator*(cplx s, const MatrixJet& a) {
  MatrixJet r = a;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r.at(i, j) *= s;
  return r;
}

MatrixJet commutator(const MatrixJet& a, const MatrixJet& b) {
  return a * b - b * a;
}

MatrixJet anticommutator(const MatrixJet& a, const MatrixJet& b) {
  return a * b + b * a;
}

VectorJet::VectorJet(int n, int order)
    : n_(n), order_(order), e_(n, Jet2(order, cplx{0.0, 0.0})) {
  if (n < 1 || n > kMaxDim) throw Error("VectorJet: bad dimension");
}

VectorJet VectorJet::deriv_xi() const {
  VectorJet r(n_, order_ - 1);
  for (int i = 0; i < n_; ++i) r.at(i) = e_[i].deriv_xi();
  return r;
}

VectorJet VectorJet::deriv_xibar() const {
  VectorJet r(n_, order_ - 1);
  for (int i = 0; i < n_; ++i) r.at(i) = e_[i].deriv_xibar();
  return r;
}

VectorJet VectorJet::truncated(int new_order) const {
  VectorJet r(n_, new_order);
  for (int i = 0; i < n_; ++i) r.at(i) = e_[i].truncated(new_order);
  return r;
}

Jet2 VectorJet::norm_sq() const {
  Jet2 s(order_, 0.0);
  for (int i = 0; i < n_; ++i) s += e_[i].conjugate() * e_[i];
  return s;
}

MatrixJet VectorJet::outer_self() const {
  MatrixJet m(n_, order_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m.at(i, j) = e_[i] * e_[j].conjugate();
  return m;
}

Jet2 VectorJet::inner(const VectorJet& g) const {
  if (g.dim() != n_) throw Error("VectorJet::inner: dimension mismatch");
  Jet2 s(order_, 0.0);
  for (int i = 0; i < n_; ++i) s += e_[i].conjugate() * g.at(i);
  return s;
}

VectorJet operator*(const MatrixJet& m, const VectorJet& v) {
  if (m.dim() != v.dim()) throw Error("matvec: dimension mismatch");
  if (m.order() != v.order()) throw Error("matvec: jet order mismatch");
  VectorJet r(v.dim(), v.order());
  for (int i = 0; i < m.dim(); ++i) {
    Jet2 s(v.order(), 0.0);
    for (int k = 0; k < m.dim(); ++k) s += m.at(i, k) * v.at(k);
    r.at(i) = s;
  }
  return r;
}

VectorJet operator-(const VectorJet& a, const VectorJet& b) {
  if (a.dim() != b.dim() || a.order() != b.order())
    throw Error("vector jet sub: mismatch");
  VectorJet r = a;
  for (int i = 0; i < a.dim(); ++i) r.at(i) -= b.at(i);
  return r;
}

}  // namespace cpn
