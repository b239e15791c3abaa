#include "cpnsurf/su_basis.hpp"

#include <cmath>

namespace cpn {

std::vector<CMatrix> su_basis(int n) {
  if (n < 2 || n > kMaxDim) throw Error("su_basis: bad dimension");
  std::vector<CMatrix> basis;
  basis.reserve(static_cast<size_t>(n) * n - 1);
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      CMatrix m(n);
      m(j, k) = kI;
      m(k, j) = kI;
      basis.push_back(m);
    }
  }
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      CMatrix m(n);
      m(j, k) = 1.0;
      m(k, j) = -1.0;
      basis.push_back(m);
    }
  }
  for (int l = 1; l < n; ++l) {
    CMatrix m(n);
    const double w = std::sqrt(2.0 / (l * (l + 1.0)));
    for (int i = 0; i < l; ++i) m(i, i) = kI * w;
    m(l, l) = -kI * (w * l);
    basis.push_back(m);
  }
  return basis;
}

std::vector<double> su_coordinates(const CMatrix& x) {
  const auto basis = su_basis(x.dim());
  std::vector<double> coords;
  coords.reserve(basis.size());
  for (const CMatrix& t : basis) coords.push_back(killing_inner(x, t));
  return coords;
}

double killing_norm_sq(const CMatrix& x) { return killing_inner(x, x); }

}  // namespace cpn
