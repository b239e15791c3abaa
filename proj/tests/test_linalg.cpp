#include <doctest.h>

#include "cpnsurf/linalg.hpp"
#include "cpnsurf/rng.hpp"
#include "cpnsurf/su_basis.hpp"

using namespace cpn;

namespace {

CMatrix pauli_x() {
  CMatrix m(2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

CMatrix pauli_y() {
  CMatrix m(2);
  m(0, 1) = {0.0, -1.0};
  m(1, 0) = {0.0, 1.0};
  return m;
}

CMatrix pauli_z() {
  CMatrix m(2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

CMatrix diag2(cplx a, cplx b) {
  CMatrix m(2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

// Series reference for the exponential, independent of the Pade path.
CMatrix exp_series(const CMatrix& a) {
  // Scale down so the plain Taylor series converges fast, then square back.
  int s = 0;
  double nrm = a.frobenius_norm();
  while (nrm > 0.25) {
    nrm *= 0.5;
    ++s;
  }
  CMatrix as = std::pow(0.5, s) * a;
  CMatrix term = CMatrix::identity(a.dim());
  CMatrix sum = term;
  for (int k = 1; k <= 40; ++k) {
    term = (1.0 / k) * (term * as);
    sum += term;
  }
  for (int i = 0; i < s; ++i) sum = sum * sum;
  return sum;
}

}  // namespace

TEST_CASE("dagger on the stated examples") {
  const CMatrix id = CMatrix::identity(3);
  CHECK((id.dagger() - id).frobenius_norm() == doctest::Approx(0.0));

  CMatrix a(2);
  a(0, 1) = 1.0;
  CMatrix at = a.dagger();
  CHECK(at(1, 0) == cplx{1.0, 0.0});
  CHECK(at(0, 1) == cplx{0.0, 0.0});

  CMatrix b(2);
  b(0, 1) = {0.0, 1.0};
  CMatrix bt = b.dagger();
  CHECK(bt(1, 0) == cplx{0.0, -1.0});
}

TEST_CASE("dagger is an involution") {
  Rng rng(7, "dagger", 0);
  for (int n : {2, 5, 8}) {
    const CMatrix a = rng.gaussian_matrix(n);
    CHECK((a.dagger().dagger() - a).frobenius_norm() == doctest::Approx(0.0));
  }
}

TEST_CASE("commutator and anticommutator") {
  const CMatrix id = CMatrix::identity(2);
  Rng rng(3, "comm", 0);
  const CMatrix a = rng.gaussian_matrix(2);
  CHECK(commutator(id, a).frobenius_norm() == doctest::Approx(0.0));

  // Projector: {P, P} = 2P.
  CMatrix p = diag2(1.0, 0.0);
  CHECK((anticommutator(p, p) - 2.0 * p).frobenius_norm() == doctest::Approx(0.0));

  // [sigma_x, sigma_y] = 2i sigma_z.
  const CMatrix lhs = commutator(pauli_x(), pauli_y());
  const CMatrix rhs = (2.0 * kI) * pauli_z();
  CHECK((lhs - rhs).frobenius_norm() == doctest::Approx(0.0));

  CHECK_THROWS_AS(commutator(pauli_x(), CMatrix::identity(3)), Error);
}

TEST_CASE("trace cyclicity on random 8x8 matrices") {
  Rng rng(11, "cyclic", 0);
  for (int rep = 0; rep < 10; ++rep) {
    const CMatrix a = rng.gaussian_matrix(8);
    const CMatrix b = rng.gaussian_matrix(8);
    CHECK(std::abs((a * b).trace() - (b * a).trace()) <=
          1e-13 * a.frobenius_norm() * b.frobenius_norm());
  }
}

TEST_CASE("killing_inner on the stated examples") {
  const CMatrix x = diag2({0.0, -0.5}, {0.0, 0.5});
  CHECK(killing_inner(x, x) == doctest::Approx(0.25).epsilon(1e-14));

  const CMatrix zero = CMatrix::zero(2);
  CHECK(killing_inner(x, zero) == doctest::Approx(0.0));

  Rng rng(5, "killing", 0);
  for (int rep = 0; rep < 5; ++rep) {
    const CMatrix a = rng.su_element(3);
    const CMatrix b = rng.su_element(3);
    const CMatrix c = rng.su_element(3);
    CHECK(killing_inner(a, b) ==
          doctest::Approx(killing_inner(b, a)).epsilon(1e-12));
    const double lin = killing_inner(a + b, c);
    CHECK(lin == doctest::Approx(killing_inner(a, c) + killing_inner(b, c))
                     .epsilon(1e-11));
  }
  CHECK_THROWS_AS(killing_inner(x, CMatrix::identity(3)), Error);
}

TEST_CASE("matrix_exp on the stated examples") {
  CHECK((matrix_exp(CMatrix::zero(3)) - CMatrix::identity(3)).frobenius_norm() ==
        doctest::Approx(0.0));

  const CMatrix d = matrix_exp(diag2(1.0, -1.0));
  CHECK(std::abs(d(0, 0) - std::exp(1.0)) <= 1e-13);
  CHECK(std::abs(d(1, 1) - std::exp(-1.0)) <= 1e-13);

  Rng rng(13, "exp", 0);
  for (int rep = 0; rep < 5; ++rep) {
    const CMatrix a = rng.gaussian_matrix(4);
    const CMatrix prod = matrix_exp(a) * matrix_exp(-a);
    CHECK((prod - CMatrix::identity(4)).frobenius_norm() <= 1e-11);
  }
}

TEST_CASE("matrix_exp against the series oracle, relative 1e-12 up to norm 10") {
  Rng rng(17, "exp-oracle", 0);
  for (double scale : {0.5, 2.0, 6.0, 10.0}) {
    CMatrix a = rng.gaussian_matrix(4);
    a *= cplx{scale / a.frobenius_norm(), 0.0};
    const CMatrix e1 = matrix_exp(a);
    const CMatrix e2 = exp_series(a);
    CHECK((e1 - e2).frobenius_norm() / e2.frobenius_norm() <= 1e-12);
  }
}

TEST_CASE("matrix_exp similarity covariance") {
  Rng rng(19, "exp-sim", 0);
  const CMatrix a = rng.gaussian_matrix(3);
  // Well-conditioned conjugator: identity plus a small perturbation.
  CMatrix p = CMatrix::identity(3);
  const CMatrix noise = rng.gaussian_matrix(3);
  p += 0.2 * noise;
  const CMatrix pinv = solve(p, CMatrix::identity(3));
  const CMatrix lhs = matrix_exp(p * a * pinv);
  const CMatrix rhs = p * matrix_exp(a) * pinv;
  CHECK((lhs - rhs).frobenius_norm() <= 1e-10 * rhs.frobenius_norm());
}

TEST_CASE("matrix_exp norm bound") {
  CMatrix big = CMatrix::identity(2);
  big *= cplx{200.0, 0.0};
  CHECK_THROWS_AS(matrix_exp(big), Error);
}

TEST_CASE("hermitian_eigenvalues on the stated examples") {
  CMatrix d(3);
  d(0, 0) = 3.0;
  d(1, 1) = 1.0;
  d(2, 2) = 2.0;
  const auto ev = hermitian_eigenvalues(d);
  CHECK(ev[0] == doctest::Approx(1.0));
  CHECK(ev[1] == doctest::Approx(2.0));
  CHECK(ev[2] == doctest::Approx(3.0));

  // i X_0 for the N = 2 Veronese at xi = 0.
  const CMatrix ix0 = kI * diag2({0.0, -0.5}, {0.0, 0.5});
  const auto ev2 = hermitian_eigenvalues(ix0);
  CHECK(ev2[0] == doctest::Approx(-0.5));
  CHECK(ev2[1] == doctest::Approx(0.5));

  CHECK_THROWS_AS(hermitian_eigenvalues(pauli_x() * pauli_y()), Error);
}

TEST_CASE("hermitian_eigen residuals on random Hermitian matrices") {
  Rng rng(23, "eig", 0);
  for (int n : {2, 5, 9}) {
    const CMatrix g = rng.gaussian_matrix(n);
    const CMatrix h = 0.5 * (g + g.dagger());
    const auto sys = hermitian_eigen(h);
    for (int c = 0; c < n; ++c) {
      CMatrix v(n);
      for (int r = 0; r < n; ++r) v(r, 0) = sys.vectors(r, c);
      CMatrix hv = h * v;
      for (int r = 0; r < n; ++r) hv(r, 0) -= sys.values[c] * v(r, 0);
      double nrm = 0.0;
      for (int r = 0; r < n; ++r) nrm += std::norm(hv(r, 0));
      CHECK(std::sqrt(nrm) <= 1e-10 * std::max(1.0, h.frobenius_norm()));
    }
  }
}

TEST_CASE("matrix_poly_residual on the stated examples") {
  const CMatrix d = diag2(2.0, {1.0, 1.0});
  CHECK(matrix_poly_residual(d, {cplx{2.0, 0.0}, cplx{1.0, 1.0}}) ==
        doctest::Approx(0.0));

  CHECK(matrix_poly_residual(CMatrix::identity(3), {cplx{0.0, 0.0}}) ==
        doctest::Approx(std::sqrt(3.0)));
}

TEST_CASE("SuElement validates its invariants") {
  CHECK_NOTHROW(SuElement(diag2({0.0, -0.5}, {0.0, 0.5})));
  CHECK_THROWS_AS(SuElement(diag2(1.0, -1.0)), Error);  // Hermitian, not anti
  CHECK_THROWS_AS(SuElement(diag2({0.0, 1.0}, {0.0, 1.0})), Error);  // trace
}

TEST_CASE("su basis is Killing-orthonormal and spans coordinates") {
  for (int n : {2, 3, 4}) {
    const auto basis = su_basis(n);
    REQUIRE(static_cast<int>(basis.size()) == n * n - 1);
    for (size_t a = 0; a < basis.size(); ++a) {
      for (size_t b = 0; b < basis.size(); ++b) {
        const double expected = a == b ? 1.0 : 0.0;
        CHECK(killing_inner(basis[a], basis[b]) ==
              doctest::Approx(expected).epsilon(1e-12));
      }
    }
    // Coordinates reproduce the Killing norm.
    Rng rng(29, "basis", n);
    const CMatrix x = rng.su_element(n);
    const auto coords = su_coordinates(x);
    double sq = 0.0;
    for (double c : coords) sq += c * c;
    CHECK(sq == doctest::Approx(killing_norm_sq(x)).epsilon(1e-11));
  }
}

TEST_CASE("dimension cap is enforced") {
  CHECK_THROWS_AS(CMatrix(13), Error);
  CHECK_NOTHROW(CMatrix(12));
}
