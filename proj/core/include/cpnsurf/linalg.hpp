#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace cpn {

using cplx = std::complex<double>;

inline constexpr cplx kI{0.0, 1.0};

/// Library-wide error type. Messages name the violated contract.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default tolerance for structural predicates (anti-Hermiticity,
/// tracelessness, projector axioms). Frobenius norm throughout.
inline constexpr double kSuTol = 1e-10;

/// Dimension cap. Keeps every identity-suite run sub-second; the algebra
/// is dimension-generic so small N suffices.
inline constexpr int kMaxDim = 12;

/// Dense square complex matrix, row-major. Value semantics, immutable in
/// spirit: operations return new matrices.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(int n);

  static CMatrix identity(int n);
  static CMatrix zero(int n);

  int dim() const { return n_; }

  cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const cplx& operator()(int i, int j) const {
    return a_[static_cast<size_t>(i) * n_ + j];
  }

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(cplx s);

  CMatrix dagger() const;
  cplx trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  bool finite() const;

 private:
  int n_ = 0;
  std::vector<cplx> a_;
};

CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(cplx s, const CMatrix& a);
CMatrix operator*(double s, const CMatrix& a);
CMatrix operator-(const CMatrix& a);

CMatrix commutator(const CMatrix& a, const CMatrix& b);
CMatrix anticommutator(const CMatrix& a, const CMatrix& b);

/// ||m + m^dagger||_F; zero for anti-Hermitian matrices.
double anti_hermiticity_residual(const CMatrix& m);
/// ||m - m^dagger||_F; zero for Hermitian matrices.
double hermiticity_residual(const CMatrix& m);

/// Killing inner product on su(N): -1/2 Re tr(a b). Throws if the trace
/// picks up an imaginary part beyond tol (the pairing of anti-Hermitian
/// elements is real).
double killing_inner(const CMatrix& a, const CMatrix& b, double tol = 1e-8);

/// Frobenius norm of prod_j (x - root_j I). Zero iff the roots annihilate x.
double matrix_poly_residual(const CMatrix& x, const std::vector<cplx>& roots);

/// Matrix exponential by scaling-and-squaring with the degree-13 Pade
/// approximant. Relative error <= 1e-12 for ||a|| <= 10. Throws above the
/// configured norm bound.
CMatrix matrix_exp(const CMatrix& a, double norm_bound = 100.0);

struct HermitianEigenSystem {
  std::vector<double> values;  // ascending
  CMatrix vectors;             // columns are eigenvectors
};

/// Cyclic Jacobi on a Hermitian input. Throws if ||a - a^dagger|| > tol.
HermitianEigenSystem hermitian_eigen(const CMatrix& a, double tol = kSuTol);
std::vector<double> hermitian_eigenvalues(const CMatrix& a, double tol = kSuTol);

/// Solves a x = b for square a (partial pivoting). b holds one rhs per column.
CMatrix solve(CMatrix a, CMatrix b);

/// Element of su(N): anti-Hermitian and traceless within tol.
class SuElement {
 public:
  explicit SuElement(CMatrix m, double tol = kSuTol);
  const CMatrix& matrix() const { return m_; }
  int dim() const { return m_.dim(); }

 private:
  CMatrix m_;
};

/// ||lhs - rhs||_F / max(1, ||rhs||_F).
double rel_residual(const CMatrix& lhs, const CMatrix& rhs);

}  // namespace cpn
