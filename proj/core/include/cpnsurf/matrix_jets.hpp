#pragma once

#include "cpnsurf/jets.hpp"

namespace cpn {

/// N x N grid of Jet2 scalars with uniform order.
class MatrixJet {
 public:
  MatrixJet() = default;
  MatrixJet(int n, int order);

  static MatrixJet identity(int n, int order);

  int dim() const { return n_; }
  int order() const { return order_; }

  Jet2& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
  const Jet2& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

  /// Pointwise matrix value of the mixed derivative d^a dbar^b.
  CMatrix derivative(int a, int b) const;
  CMatrix value() const { return derivative(0, 0); }

  MatrixJet& operator+=(const MatrixJet& o);
  MatrixJet& operator-=(const MatrixJet& o);

  /// Conjugate transpose at jet level (entry conjugation swaps d and dbar).
  MatrixJet dagger() const;

  MatrixJet deriv_xi() const;
  MatrixJet deriv_xibar() const;
  MatrixJet truncated(int new_order) const;
  Jet2 trace() const;

 private:
  int n_ = 0;
  int order_ = -1;
  std::vector<Jet2> e_;
};

MatrixJet operator+(const MatrixJet& a, const MatrixJet& b);
MatrixJet operator-(const MatrixJet& a, const MatrixJet& b);
MatrixJet operator*(const MatrixJet& a, const MatrixJet& b);
MatrixJet operator*(const Jet2& s, const MatrixJet& a);
MatrixJet operator*(cplx s, const MatrixJet& a);
MatrixJet commutator(const MatrixJet& a, const MatrixJet& b);
MatrixJet anticommutator(const MatrixJet& a, const MatrixJet& b);

/// Column vector of Jet2 scalars, the jet of f_k in the projector recurrence.
class VectorJet {
 public:
  VectorJet() = default;
  VectorJet(int n, int order);

  int dim() const { return n_; }
  int order() const { return order_; }

  Jet2& at(int i) { return e_[i]; }
  const Jet2& at(int i) const { return e_[i]; }

  VectorJet deriv_xi() const;
  VectorJet deriv_xibar() const;
  VectorJet truncated(int new_order) const;

  /// f^dagger . f as a scalar jet (real-valued along the diagonal).
  Jet2 norm_sq() const;

  /// f (x) f^dagger.
  MatrixJet outer_self() const;

  /// f^dagger . g.
  Jet2 inner(const VectorJet& g) const;

 private:
  int n_ = 0;
  int order_ = -1;
  std::vector<Jet2> e_;
};

VectorJet operator*(const MatrixJet& m, const VectorJet& v);
VectorJet operator-(const VectorJet& a, const VectorJet& b);

}  // namespace cpn
