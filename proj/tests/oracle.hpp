// Test-only oracles, independent of the jet code path.
//
// Projectors are evaluated pointwise by Gram-Schmidt on the moving flag
// {f0, f0', f0'', ...} (derivatives of the polynomial curve taken exactly
// on the coefficients), and derivatives come from central finite
// differences on the real and imaginary parts of xi, combined into the
// holomorphic/anti-holomorphic pair. Step sizes: 1e-5 for first
// derivatives; 1e-4 for second derivatives, where the smaller step would
// sit at the roundoff floor of the 1e-6 acceptance band.
#pragma once

#include "cpnsurf/chain.hpp"

#include <functional>

namespace oracle {

using cpn::cplx;
using cpn::CMatrix;

// m-th derivative of the polynomial curve component, exact on coefficients.
inline std::vector<cplx> curve_derivative(const cpn::HolomorphicCurve& curve,
                                          cplx xi, int m) {
  std::vector<cplx> v(curve.n, cplx{0.0, 0.0});
  for (int c = 0; c < curve.n; ++c) {
    const auto& coeffs = curve.coeffs[c];
    for (int p = m; p < static_cast<int>(coeffs.size()); ++p) {
      double fall = 1.0;
      for (int q = 0; q < m; ++q) fall *= (p - q);
      v[c] += coeffs[p] * fall * std::pow(xi, p - m);
    }
  }
  return v;
}

// P_k at a point via Gram-Schmidt on {f0, f0', .., f0^(k)}.
inline CMatrix projector(const cpn::HolomorphicCurve& curve, cplx xi, int k) {
  std::vector<std::vector<cplx>> basis;
  for (int j = 0; j <= k; ++j) {
    std::vector<cplx> v = curve_derivative(curve, xi, j);
    for (const auto& e : basis) {
      cplx ip{0.0, 0.0};
      for (int i = 0; i < curve.n; ++i) ip += std::conj(e[i]) * v[i];
      for (int i = 0; i < curve.n; ++i) v[i] -= ip * e[i];
    }
    double nrm = 0.0;
    for (const auto& z : v) nrm += std::norm(z);
    nrm = std::sqrt(nrm);
    if (nrm <= 1e-12) throw cpn::Error("oracle: degenerate flag");
    for (auto& z : v) z /= nrm;
    basis.push_back(std::move(v));
  }
  CMatrix p(curve.n);
  const auto& e = basis.back();
  for (int i = 0; i < curve.n; ++i)
    for (int j = 0; j < curve.n; ++j) p(i, j) = e[i] * std::conj(e[j]);
  return p;
}

using Field = std::function<CMatrix(cplx)>;

inline Field projector_field(const cpn::HolomorphicCurve& curve, int k) {
  return [curve, k](cplx xi) { return projector(curve, xi, k); };
}

// First Wirtinger derivatives, h = 1e-5.
inline CMatrix d_holo(const Field& f, cplx xi, double h = 1e-5) {
  const CMatrix fx = (1.0 / (2.0 * h)) * (f(xi + h) - f(xi - h));
  const CMatrix fy = (1.0 / (2.0 * h)) * (f(xi + cplx{0.0, h}) - f(xi - cplx{0.0, h}));
  return 0.5 * (fx - cpn::kI * fy);
}

inline CMatrix d_anti(const Field& f, cplx xi, double h = 1e-5) {
  const CMatrix fx = (1.0 / (2.0 * h)) * (f(xi + h) - f(xi - h));
  const CMatrix fy = (1.0 / (2.0 * h)) * (f(xi + cplx{0.0, h}) - f(xi - cplx{0.0, h}));
  return 0.5 * (fx + cpn::kI * fy);
}

// Second derivatives, h = 1e-4: d dbar = (dxx + dyy)/4,
// d^2 = (dxx - dyy - 2i dxy)/4, dbar^2 = (dxx - dyy + 2i dxy)/4.
struct SecondDerivatives {
  CMatrix ddbar, d2, dbar2;
};

inline SecondDerivatives second_derivatives(const Field& f, cplx xi,
                                            double h = 1e-4) {
  const CMatrix f0 = f(xi);
  const CMatrix fxx =
      (1.0 / (h * h)) * (f(xi + h) - 2.0 * f0 + f(xi - h));
  const CMatrix fyy = (1.0 / (h * h)) *
                      (f(xi + cplx{0.0, h}) - 2.0 * f0 + f(xi - cplx{0.0, h}));
  const CMatrix fxy =
      (1.0 / (4.0 * h * h)) *
      (f(xi + cplx{h, h}) - f(xi + cplx{h, -h}) - f(xi + cplx{-h, h}) +
       f(xi + cplx{-h, -h}));
  SecondDerivatives d;
  d.ddbar = 0.25 * (fxx + fyy);
  d.d2 = 0.25 * (fxx - fyy - (2.0 * cpn::kI) * fxy);
  d.dbar2 = 0.25 * (fxx - fyy + (2.0 * cpn::kI) * fxy);
  return d;
}

}  // namespace oracle
