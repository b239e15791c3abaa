#pragma once

#include "cpnsurf/linalg.hpp"

namespace cpn {

/// Orthonormal basis of su(N) under the Killing product (A, B) = -1/2 tr(AB):
/// i times the generalized Gell-Mann matrices. Ordering (documented for the
/// export format): symmetric pair elements i(E_jk + E_kj) for j < k in
/// lexicographic order, then the antisymmetric pairs E_jk - E_kj in the same
/// order, then the N-1 diagonal elements i sqrt(2/(l(l+1))) diag(1,..,1,-l,0,..).
std::vector<CMatrix> su_basis(int n);

/// Killing coordinates of an anti-Hermitian traceless matrix in su_basis
/// order; length N^2 - 1.
std::vector<double> su_coordinates(const CMatrix& x);

/// Sum of squared coordinates, i.e. the Killing norm (x, x).
double killing_norm_sq(const CMatrix& x);

}  // namespace cpn
