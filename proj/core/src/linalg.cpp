#include "cpnsurf/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace cpn {

CMatrix::CMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, cplx{0.0, 0.0}) {
  if (n < 1 || n > kMaxDim) {
    throw Error("CMatrix: dimension must be in [1, " + std::to_string(kMaxDim) +
                "], got " + std::to_string(n));
  }
}

CMatrix CMatrix::identity(int n) {
  CMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::zero(int n) { return CMatrix(n); }

namespace {
void require_same_dim(const CMatrix& a, const CMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw Error(std::string(op) + ": dimension mismatch (" +
                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
  }
}
}  // namespace

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  require_same_dim(*this, o, "operator+");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  require_same_dim(*this, o, "operator-");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
  for (auto& v : a_) v *= s;
  return *this;
}

CMatrix CMatrix::dagger() const {
  CMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(i, j) = std::conj((*this)(j, i));
  return r;
}

cplx CMatrix::trace() const {
  cplx t{0.0, 0.0};
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& v : a_) s += std::norm(v);
  return std::sqrt(s);
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : a_) m = std::max(m, std::abs(v));
  return m;
}

bool CMatrix::finite() const {
  for (const auto& v : a_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  CMatrix r = a;
  r += b;
  return r;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  CMatrix r = a;
  r -= b;
  return r;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a, b, "operator*");
  const int n = a.dim();
  CMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{0.0, 0.0}) continue;
      for (int j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

CMatrix operator*(cplx s, const CMatrix& a) {
  CMatrix r = a;
  r *= s;
  return r;
}

CMatrix operator*(double s, const CMatrix& a) { return cplx{s, 0.0} * a; }

CMatrix operator-(const CMatrix& a) { return cplx{-1.0, 0.0} * a; }

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

CMatrix anticommutator(const CMatrix& a, const CMatrix& b) { return a * b + b * a; }

double anti_hermiticity_residual(const CMatrix& m) {
  return (m + m.dagger()).frobenius_norm();
}

double hermiticity_residual(const CMatrix& m) {
  return (m - m.dagger()).frobenius_norm();
}

double killing_inner(const CMatrix& a, const CMatrix& b, double tol) {
  require_same_dim(a, b, "killing_inner");
  const cplx t = (a * b).trace();
  if (std::abs(t.imag()) > tol) {
    throw Error("killing_inner: tr(a b) has imaginary part " +
                std::to_string(t.imag()));
  }
  return -0.5 * t.real();
}

double matrix_poly_residual(const CMatrix& x, const std::vector<cplx>& roots) {
  CMatrix acc = CMatrix::identity(x.dim());
  const CMatrix id = CMatrix::identity(x.dim());
  for (const cplx& r : roots) acc = acc * (x - r * id);
  return acc.frobenius_norm();
}

// ---------------------------------------------------------------------------
// Matrix exponential: [13/13] Pade with scaling and squaring.
// ---------------------------------------------------------------------------

CMatrix matrix_exp(const CMatrix& a, double norm_bound) {
  if (!a.finite()) throw Error("matrix_exp: non-finite entries");
  const double nrm = a.frobenius_norm();
  if (nrm > norm_bound) {
    throw Error("matrix_exp: norm " + std::to_string(nrm) +
                " exceeds bound " + std::to_string(norm_bound));
  }
  static const double b[14] = {
      64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
      1187353796428800.0,  129060195264000.0,   10559470521600.0,
      670442572800.0,      33522128640.0,       1323241920.0,
      40840800.0,          960960.0,            16380.0,
      182.0,               1.0};
  const double theta13 = 5.371920351148152;
  int s = 0;
  if (nrm > theta13) {
    s = static_cast<int>(std::ceil(std::log2(nrm / theta13)));
  }
  CMatrix as = std::pow(0.5, s) * a;

  const int n = a.dim();
  const CMatrix id = CMatrix::identity(n);
  const CMatrix a2 = as * as;
  const CMatrix a4 = a2 * a2;
  const CMatrix a6 = a2 * a4;

  CMatrix u = as * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 +
                    b[5] * a4 + b[3] * a2 + b[1] * id);
  CMatrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 +
              b[4] * a4 + b[2] * a2 + b[0] * id;

  CMatrix r = solve(v - u, v + u);
  for (int i = 0; i < s; ++i) r = r * r;
  return r;
}

CMatrix solve(CMatrix a, CMatrix b) {
  require_same_dim(a, b, "solve");
  const int n = a.dim();
  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::abs(a(col, col));
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a(r, col)) > best) {
        best = std::abs(a(r, col));
        piv = r;
      }
    }
    if (best == 0.0) throw Error("solve: singular matrix");
    if (piv != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(a(col, j), a(piv, j));
        std::swap(b(col, j), b(piv, j));
      }
    }
    const cplx d = a(col, col);
    for (int r = col + 1; r < n; ++r) {
      const cplx f = a(r, col) / d;
      if (f == cplx{0.0, 0.0}) continue;
      for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
      for (int j = 0; j < n; ++j) b(r, j) -= f * b(col, j);
    }
  }
  CMatrix x(n);
  for (int col = 0; col < n; ++col) {
    for (int r = n - 1; r >= 0; --r) {
      cplx s = b(r, col);
      for (int j = r + 1; j < n; ++j) s -= a(r, j) * x(j, col);
      x(r, col) = s / a(r, r);
    }
  }
  return x;
}

// ---------------------------------------------------------------------------
// Hermitian eigensolver: cyclic Jacobi with complex rotations.
// ---------------------------------------------------------------------------

namespace {
double off_dilevel(const CMatrix& h) {
  double s = 0.0;
  for (int i = 0; i < h.dim(); ++i)
    for (int j = 0; j < h.dim(); ++j)
      if (i != j) s += std::norm(h(i, j));
  return std::sqrt(s);
}
}  // namespace

HermitianEigenSystem hermitian_eigen(const CMatrix& a, double tol) {
  const double herm = hermiticity_residual(a);
  if (herm > tol) {
    throw Error("hermitian_eigen: input is not Hermitian (residual " +
                std::to_string(herm) + ")");
  }
  const int n = a.dim();
  // Symmetrize exactly to guard the iteration.
  CMatrix h(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  CMatrix v = CMatrix::identity(n);

  const double scale = std::max(1.0, h.frobenius_norm());
  for (int sweep = 0; sweep < 100; ++sweep) {
    if (off_dilevel(h) <= 1e-15 * scale) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx hpq = h(p, q);
        if (std::abs(hpq) <= 1e-18 * scale) continue;
        const double app = h(p, p).real();
        const double aqq = h(q, q).real();
        const cplx phase = hpq / std::abs(hpq);
        const double tau = (aqq - app) / (2.0 * std::abs(hpq));
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // Plane rotation J: J(p,p)=c, J(q,q)=c, J(p,q)=s*phase, J(q,p)=-s*conj(phase).
        // Update h <- J^dagger h J and v <- v J, touching rows/cols p,q only.
        for (int k = 0; k < n; ++k) {
          const cplx hkp = h(k, p);
          const cplx hkq = h(k, q);
          h(k, p) = c * hkp - s * std::conj(phase) * hkq;
          h(k, q) = s * phase * hkp + c * hkq;
        }
        for (int k = 0; k < n; ++k) {
          const cplx hpk = h(p, k);
          const cplx hqk = h(q, k);
          h(p, k) = c * hpk - s * phase * hqk;
          h(q, k) = s * std::conj(phase) * hpk + c * hqk;
        }
        for (int k = 0; k < n; ++k) {
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q);
          v(k, p) = c * vkp - s * std::conj(phase) * vkq;
          v(k, q) = s * phase * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return h(i, i).real() < h(j, j).real(); });

  HermitianEigenSystem out;
  out.values.resize(n);
  out.vectors = CMatrix(n);
  for (int c2 = 0; c2 < n; ++c2) {
    out.values[c2] = h(order[c2], order[c2]).real();
    for (int r = 0; r < n; ++r) out.vectors(r, c2) = v(r, order[c2]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& a, double tol) {
  return hermitian_eigen(a, tol).values;
}

SuElement::SuElement(CMatrix m, double tol) : m_(std::move(m)) {
  const double ah = anti_hermiticity_residual(m_);
  if (ah > tol) {
    throw Error("SuElement: not anti-Hermitian (residual " + std::to_string(ah) + ")");
  }
  const double tr = std::abs(m_.trace());
  if (tr > tol) {
    throw Error("SuElement: not traceless (|tr| = " + std::to_string(tr) + ")");
  }
}

double rel_residual(const CMatrix& lhs, const CMatrix& rhs) {
  return (lhs - rhs).frobenius_norm() / std::max(1.0, rhs.frobenius_norm());
}

}  // namespace cpn
