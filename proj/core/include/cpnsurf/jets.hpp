#pragma once

#include "cpnsurf/linalg.hpp"

#include <vector>

namespace cpn {

enum class Var { xi, xibar };

/// Truncated Taylor expansion in the two independent Wirtinger variables.
///
/// A jet of order d stores coefficients c_{ab} for a + b <= d, where
/// c_{ab} = (d^a dbar^b f) / (a! b!) at the base point. The two variables
/// are independent: conjugate fields are built with conjugate(), never by
/// conjugating evaluated values, so d and dbar are exact at the point.
/// Arithmetic truncates to the common order; mixing orders is an error.
class Jet2 {
 public:
  Jet2() = default;
  Jet2(int order, cplx constant);

  /// Jet of a coordinate variable: c00 = base, c10 or c01 = 1.
  static Jet2 seed(cplx base, Var which, int order);
  static Jet2 constant(cplx value, int order) { return Jet2(order, value); }

  int order() const { return order_; }

  cplx& coeff(int a, int b) { return c_[index(a, b)]; }
  const cplx& coeff(int a, int b) const { return c_[index(a, b)]; }

  /// Pointwise value (c00).
  cplx value() const { return c_[0]; }
  /// True mixed derivative d^a dbar^b at the base point: a! b! c_{ab}.
  cplx derivative(int a, int b) const;

  Jet2& operator+=(const Jet2& o);
  Jet2& operator-=(const Jet2& o);
  Jet2& operator*=(cplx s);

  /// Wirtinger conjugate: c'_{ab} = conj(c_{ba}). Swaps the roles of d and dbar.
  Jet2 conjugate() const;

  /// Jet b with (*this) * b = 1 up to the order. Throws "singular
  /// normalization" when |c00| <= 1e-12.
  Jet2 reciprocal() const;

  /// d-derivative as a jet of order-1 lower (c'_{ab} = (a+1) c_{(a+1)b}).
  Jet2 deriv_xi() const;
  Jet2 deriv_xibar() const;

  Jet2 truncated(int new_order) const;

  bool finite() const;

 private:
  static int coeff_count(int order) { return (order + 1) * (order + 2) / 2; }
  int index(int a, int b) const;

  int order_ = -1;
  std::vector<cplx> c_;
};

Jet2 operator+(const Jet2& a, const Jet2& b);
Jet2 operator-(const Jet2& a, const Jet2& b);
Jet2 operator*(const Jet2& a, const Jet2& b);
Jet2 operator*(cplx s, const Jet2& a);
Jet2 operator-(const Jet2& a);

/// One-variable truncated expansion, used for traveling-wave profiles
/// theta(s). Coefficients are derivative/n!.
class Jet1 {
 public:
  Jet1() = default;
  Jet1(int order, double base);  // seed of the variable s

  static Jet1 constant(int order, cplx value);
  static Jet1 cosine(double omega, double s0, int order);  // cos(omega s)
  static Jet1 sine(double omega, double s0, int order);    // sin(omega s)

  int order() const { return static_cast<int>(c_.size()) - 1; }
  cplx& coeff(int k) { return c_[k]; }
  const cplx& coeff(int k) const { return c_[k]; }
  cplx value() const { return c_[0]; }
  cplx derivative(int k) const;

  Jet1 conjugate() const;
  Jet1 reciprocal() const;
  Jet1 deriv() const;

  /// Substitutes s = s0 + u + kappa v, producing a two-variable jet in the
  /// light-cone increments (u, v) of the same order.
  Jet2 compose_linear(double kappa) const;

 private:
  std::vector<cplx> c_;
};

Jet1 operator+(const Jet1& a, const Jet1& b);
Jet1 operator-(const Jet1& a, const Jet1& b);
Jet1 operator*(const Jet1& a, const Jet1& b);
Jet1 operator*(cplx s, const Jet1& a);

double binomial(int n, int k);

}  // namespace cpn
