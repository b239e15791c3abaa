#include "cpnsurf/jets.hpp"

#include <cmath>

namespace cpn {

namespace {
void require_same_order(int a, int b, const char* op) {
  if (a != b) {
    throw Error(std::string(op) + ": jet order mismatch (" + std::to_string(a) +
                " vs " + std::to_string(b) + ")");
  }
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}
}  // namespace

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Jet2::Jet2(int order, cplx constant) : order_(order), c_(coeff_count(order)) {
  if (order < 0) throw Error("Jet2: negative order");
  c_[0] = constant;
}

int Jet2::index(int a, int b) const {
  // Rows by a; row a holds b = 0..order-a.
  return a * (order_ + 1) - a * (a - 1) / 2 + b;
}

Jet2 Jet2::seed(cplx base, Var which, int order) {
  if (order < 1) throw Error("Jet2::seed: order must be >= 1");
  Jet2 j(order, base);
  if (which == Var::xi)
    j.coeff(1, 0) = 1.0;
  else
    j.coeff(0, 1) = 1.0;
  return j;
}

cplx Jet2::derivative(int a, int b) const {
  if (a < 0 || b < 0 || a + b > order_) {
    throw Error("Jet2::derivative: order " + std::to_string(a) + "+" +
                std::to_string(b) + " exceeds jet order " + std::to_string(order_));
  }
  return factorial(a) * factorial(b) * coeff(a, b);
}

Jet2& Jet2::operator+=(const Jet2& o) {
  require_same_order(order_, o.order_, "jet add");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Jet2& Jet2::operator-=(const Jet2& o) {
  require_same_order(order_, o.order_, "jet sub");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Jet2& Jet2::operator*=(cplx s) {
  for (auto& v : c_) v *= s;
  return *this;
}

Jet2 Jet2::conjugate() const {
  Jet2 r(order_, 0.0);
  for (int a = 0; a <= order_; ++a)
    for (int b = 0; b <= order_ - a; ++b) r.coeff(a, b) = std::conj(coeff(b, a));
  return r;
}

Jet2 Jet2::reciprocal() const {
  if (std::abs(c_[0]) <= 1e-12) throw Error("jet reciprocal: singular normalization");
  Jet2 r(order_, 1.0 / c_[0]);
  // March by total degree; each coefficient depends on lower-degree ones.
  for (int t = 1; t <= order_; ++t) {
    for (int a = 0; a <= t; ++a) {
      const int b = t - a;
      cplx s{0.0, 0.0};
      for (int p = 0; p <= a; ++p) {
        for (int q = 0; q <= b; ++q) {
          if (p == 0 && q == 0) continue;
          s += coeff(p, q) * r.coeff(a - p, b - q);
        }
      }
      r.coeff(a, b) = -s / c_[0];
    }
  }
  return r;
}

Jet2 Jet2::deriv_xi() const {
  if (order_ < 1) throw Error("jet deriv: insufficient jet order");
  Jet2 r(order_ - 1, 0.0);
  for (int a = 0; a <= order_ - 1; ++a)
    for (int b = 0; b <= order_ - 1 - a; ++b)
      r.coeff(a, b) = static_cast<double>(a + 1) * coeff(a + 1, b);
  return r;
}

Jet2 Jet2::deriv_xibar() const {
  if (order_ < 1) throw Error("jet deriv: insufficient jet order");
  Jet2 r(order_ - 1, 0.0);
  for (int a = 0; a <= order_ - 1; ++a)
    for (int b = 0; b <= order_ - 1 - a; ++b)
      r.coeff(a, b) = static_cast<double>(b + 1) * coeff(a, b + 1);
  return r;
}

Jet2 Jet2::truncated(int new_order) const {
  if (new_order > order_) throw Error("Jet2::truncated: cannot raise order");
  Jet2 r(new_order, 0.0);
  for (int a = 0; a <= new_order; ++a)
    for (int b = 0; b <= new_order - a; ++b) r.coeff(a, b) = coeff(a, b);
  return r;
}

bool Jet2::finite() const {
  for (const auto& v : c_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

Jet2 operator+(const Jet2& a, const Jet2& b) {
  Jet2 r = a;
  r += b;
  return r;
}

Jet2 operator-(const Jet2& a, const Jet2& b) {
  Jet2 r = a;
  r -= b;
  return r;
}

Jet2 operator*(const Jet2& a, const Jet2& b) {
  require_same_order(a.order(), b.order(), "jet multiply");
  const int d = a.order();
  Jet2 r(d, 0.0);
  for (int pa = 0; pa <= d; ++pa) {
    for (int pb = 0; pb <= d - pa; ++pb) {
      const cplx av = a.coeff(pa, pb);
      if (av == cplx{0.0, 0.0}) continue;
      for (int qa = 0; pa + qa <= d; ++qa) {
        for (int qb = 0; pa + pb + qa + qb <= d; ++qb) {
          r.coeff(pa + qa, pb + qb) += av * b.coeff(qa, qb);
        }
      }
    }
  }
  return r;
}

Jet2 operator*(cplx s, const Jet2& a) {
  Jet2 r = a;
  r *= s;
  return r;
}

Jet2 operator-(const Jet2& a) { return cplx{-1.0, 0.0} * a; }

// ---------------------------------------------------------------------------
// Jet1
// ---------------------------------------------------------------------------

Jet1::Jet1(int order, double base) : c_(order + 1) {
  if (order < 0) throw Error("Jet1: negative order");
  c_[0] = base;
  if (order >= 1) c_[1] = 1.0;
}

Jet1 Jet1::constant(int order, cplx value) {
  Jet1 j;
  j.c_.assign(order + 1, cplx{0.0, 0.0});
  j.c_[0] = value;
  return j;
}

Jet1 Jet1::cosine(double omega, double s0, int order) {
  Jet1 j = constant(order, 0.0);
  for (int k = 0; k <= order; ++k) {
    // d^k cos(w s) = w^k cos(w s + k pi/2)
    j.c_[k] = std::pow(omega, k) * std::cos(omega * s0 + k * M_PI / 2.0) / factorial(k);
  }
  return j;
}

Jet1 Jet1::sine(double omega, double s0, int order) {
  Jet1 j = constant(order, 0.0);
  for (int k = 0; k <= order; ++k) {
    j.c_[k] = std::pow(omega, k) * std::sin(omega * s0 + k * M_PI / 2.0) / factorial(k);
  }
  return j;
}

cplx Jet1::derivative(int k) const {
  if (k < 0 || k > order()) throw Error("Jet1::derivative: out of range");
  return factorial(k) * c_[k];
}

Jet1 Jet1::conjugate() const {
  Jet1 r = *this;
  for (auto& v : r.c_) v = std::conj(v);
  return r;
}

Jet1 Jet1::reciprocal() const {
  if (std::abs(c_[0]) <= 1e-12) throw Error("jet reciprocal: singular normalization");
  Jet1 r = constant(order(), 1.0 / c_[0]);
  for (int k = 1; k <= order(); ++k) {
    cplx s{0.0, 0.0};
    for (int p = 1; p <= k; ++p) s += c_[p] * r.c_[k - p];
    r.c_[k] = -s / c_[0];
  }
  return r;
}

Jet1 Jet1::deriv() const {
  if (order() < 1) throw Error("jet deriv: insufficient jet order");
  Jet1 r = constant(order() - 1, 0.0);
  for (int k = 0; k < order(); ++k) r.c_[k] = static_cast<double>(k + 1) * c_[k + 1];
  return r;
}

Jet2 Jet1::compose_linear(double kappa) const {
  // s = s0 + u + kappa v: the degree-n coefficient spreads over (a, b)
  // with a + b = n, weight C(n, a) kappa^b.
  const int d = order();
  Jet2 r(d, 0.0);
  for (int n = 0; n <= d; ++n) {
    for (int a = 0; a <= n; ++a) {
      const int b = n - a;
      r.coeff(a, b) = c_[n] * binomial(n, a) * std::pow(kappa, b);
    }
  }
  return r;
}

Jet1 operator+(const Jet1& a, const Jet1& b) {
  if (a.order() != b.order()) throw Error("jet add: jet order mismatch");
  Jet1 r = a;
  for (int k = 0; k <= a.order(); ++k) r.coeff(k) += b.coeff(k);
  return r;
}

Jet1 operator-(const Jet1& a, const Jet1& b) {
  if (a.order() != b.order()) throw Error("jet sub: jet order mismatch");
  Jet1 r = a;
  for (int k = 0; k <= a.order(); ++k) r.coeff(k) -= b.coeff(k);
  return r;
}

Jet1 operator*(const Jet1& a, const Jet1& b) {
  if (a.order() != b.order()) throw Error("jet multiply: jet order mismatch");
  Jet1 r = Jet1::constant(a.order(), 0.0);
  for (int p = 0; p <= a.order(); ++p)
    for (int q = 0; p + q <= a.order(); ++q) r.coeff(p + q) += a.coeff(p) * b.coeff(q);
  return r;
}

Jet1 operator*(cplx s, const Jet1& a) {
  Jet1 r = a;
  for (int k = 0; k <= a.order(); ++k) r.coeff(k) *= s;
  return r;
}

}  // namespace cpn
