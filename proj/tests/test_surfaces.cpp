#include <doctest.h>

#include "cpnsurf/rng.hpp"
#include "cpnsurf/surfaces.hpp"
#include "cpnsurf/words.hpp"

using namespace cpn;

TEST_CASE("weierstrass surface N=2, k=0 at the origin") {
  const ProjectorChain chain = build_chain(veronese_curve(2), {0.0, 0.0}, 3);
  const SurfaceSample s = weierstrass_surface(chain, 0);
  CHECK(std::abs(s.x(0, 0) - cplx{0.0, -0.5}) <= 1e-14);
  CHECK(std::abs(s.x(1, 1) - cplx{0.0, 0.5}) <= 1e-14);
  CHECK(std::abs(s.x(0, 1)) <= 1e-14);
}

TEST_CASE("surface trace identities at random points") {
  for (int n : {2, 3, 4}) {
    Rng rng(83, "surface", n);
    const ProjectorChain chain = build_chain(veronese_curve(n), rng.disk(2.0), 3);
    for (int k = 0; k < n; ++k) {
      const SurfaceSample s = weierstrass_surface(chain, k);
      CHECK(std::abs(s.x.trace()) <= 1e-12);
      CHECK(anti_hermiticity_residual(s.x) <= 1e-12);
      const double c = chain.c[k];
      CHECK(std::abs((s.x * s.x).trace() - cplx{1.0 + n * c * (c - 2.0), 0.0}) <=
            1e-11);
      // Reality pairing of the tangents.
      CHECK((s.dx.dagger() + s.dbx).frobenius_norm() <= 1e-11);
    }
  }
}

TEST_CASE("projector_from_surface inverts the immersion") {
  Rng rng(89, "inverse", 0);
  const ProjectorChain chain = build_chain(veronese_curve(3), rng.disk(2.0), 3);
  for (int k = 0; k < 3; ++k) {
    const SurfaceSample s = weierstrass_surface(chain, k);
    const CMatrix p = projector_from_surface(s.x, k, 3);
    CHECK((p - chain.proj(k).value()).frobenius_norm() <= 1e-10);
  }

  // Explicit 2x2 value.
  CMatrix x(2);
  x(0, 0) = {0.0, -0.5};
  x(1, 1) = {0.0, 0.5};
  const CMatrix p = projector_from_surface(x, 0, 2);
  CHECK(std::abs(p(0, 0) - 1.0) <= 1e-14);
  CHECK(std::abs(p(1, 1)) <= 1e-14);

  // Constant projector shape X = i c0 I - i P.
  CMatrix q(3);
  q(1, 1) = 1.0;
  const double c0 = level_constant(0, 3);
  const CMatrix xc = (kI * c0) * CMatrix::identity(3) - kI * q;
  CHECK((projector_from_surface(xc, 0, 3) - q).frobenius_norm() <= 1e-12);

  // A generic anti-Hermitian matrix is not a surface point.
  Rng rng2(97, "notsurface", 0);
  const CMatrix bad = rng2.su_element(3);
  CHECK_THROWS_AS(projector_from_surface(bad, 0, 3), Error);
}

TEST_CASE("tangents agree between the sum and commutator forms") {
  Rng rng(101, "tangents", 0);
  const ProjectorChain chain = build_chain(veronese_curve(3), rng.disk(2.0), 3);
  for (int k = 0; k < 3; ++k) {
    CHECK(tangents_two_ways(chain, k).max_residual <= 1e-10);
  }
}

TEST_CASE("linear dependence of the immersion family") {
  // N = 2: X_1 = X_0.
  Rng rng(103, "lindep", 0);
  const ProjectorChain chain2 = build_chain(veronese_curve(2), rng.disk(2.0), 3);
  const CMatrix x0 = weierstrass_jet(chain2, 0).value();
  const CMatrix x1 = weierstrass_jet(chain2, 1).value();
  CHECK((x0 - x1).frobenius_norm() <= 1e-12);

  const auto r2 = linear_dependence_check(chain2);
  CHECK(r2.alternating <= 1e-10);
  CHECK(r2.weighted <= 1e-10);

  const ProjectorChain chain3 = build_chain(veronese_curve(3), rng.disk(2.0), 3);
  const auto r3 = linear_dependence_check(chain3);
  CHECK(r3.alternating <= 1e-10);
  CHECK(r3.weighted <= 1e-10);
}

TEST_CASE("minimal polynomial roots per sheet") {
  const auto r20 = minimal_poly_roots(0, 2);
  REQUIRE(r20.size() == 2);
  CHECK(std::abs(r20[0] - cplx{0.0, 0.5}) <= 1e-15);
  CHECK(std::abs(r20[1] - cplx{0.0, -0.5}) <= 1e-15);

  const auto r31 = minimal_poly_roots(1, 3);
  REQUIRE(r31.size() == 3);
  CHECK(std::abs(r31[0] - cplx{0.0, 1.0}) <= 1e-15);
  CHECK(std::abs(r31[1]) <= 1e-15);
  CHECK(std::abs(r31[2] - cplx{0.0, -1.0}) <= 1e-15);

  // Top sheet carries the conjugate-level constant; for N = 2 the root set
  // must coincide with the holomorphic one since X_1 = X_0.
  const auto r21 = minimal_poly_roots(1, 2);
  REQUIRE(r21.size() == 2);
  CHECK(std::abs(r21[0] - cplx{0.0, -0.5}) <= 1e-15);
  CHECK(std::abs(r21[1] - cplx{0.0, 0.5}) <= 1e-15);

  CHECK_THROWS_AS(minimal_poly_roots(3, 3), Error);
}

TEST_CASE("minimal polynomial annihilates the surface and pins its spectrum") {
  for (int n : {2, 3, 4}) {
    Rng rng(107, "minpoly", n);
    const ProjectorChain chain = build_chain(veronese_curve(n), rng.disk(2.0), 2);
    for (int k = 0; k < n; ++k) {
      const CMatrix x = weierstrass_jet(chain, k).value();
      const auto roots = minimal_poly_roots(k, n);
      CHECK(matrix_poly_residual(x, roots) <= 1e-9);
      for (double ev : hermitian_eigenvalues(kI * x, 1e-8)) {
        double best = 1e300;
        for (const cplx& r : roots) best = std::min(best, std::abs(ev + r.imag()));
        CHECK(best <= 1e-8);
      }
    }
  }
}

TEST_CASE("killing closed forms on the stated examples") {
  CHECK(killing_closed_form(0, 0, 2) == doctest::Approx(0.25));
  CHECK(killing_closed_form(0, 1, 3) == doctest::Approx(0.5));
  // Index swap symmetry.
  CHECK(killing_closed_form(1, 0, 3) == doctest::Approx(0.5));

  Rng rng(109, "killing-x", 0);
  const ProjectorChain chain = build_chain(veronese_curve(4), rng.disk(2.0), 2);
  for (int k = 0; k < 4; ++k) {
    for (int m = k; m < 4; ++m) {
      const CMatrix xk = weierstrass_jet(chain, k).value();
      const CMatrix xm = weierstrass_jet(chain, m).value();
      CHECK(killing_inner(xk, xm) ==
            doctest::Approx(killing_closed_form(k, m, 4)).epsilon(1e-11));
    }
  }
}

TEST_CASE("surface EL equation and the mixed-derivative identity") {
  Rng rng(113, "surf-el", 0);
  const ProjectorChain chain = build_chain(veronese_curve(3), rng.disk(2.0), 3);
  for (int k = 0; k < 3; ++k) {
    CHECK(surface_el_residual(weierstrass_surface(chain, k)) <= 1e-9);
    CHECK(mixed_second_derivative_residual(chain, k) <= 1e-10);
  }
}

TEST_CASE("tangent self-identity") {
  Rng rng(127, "tangent-self", 0);
  for (int n : {2, 3}) {
    const ProjectorChain chain = build_chain(veronese_curve(n), rng.disk(2.0), 3);
    for (int k = 0; k < n; ++k) {
      const auto r = tangent_self_identity(weierstrass_surface(chain, k));
      CHECK(r.holomorphic <= 1e-10);
      CHECK(r.antiholomorphic <= 1e-10);
    }
  }
}

TEST_CASE("word evaluation and classification helpers") {
  Rng rng(131, "words", 0);
  const ProjectorChain chain = build_chain(veronese_curve(3), rng.disk(2.0), 3);
  const WordContext ctx = WordContext::from_chain(chain, 1);

  CHECK_THROWS_AS(eval_word(ctx, {}), Error);

  // Collapse and exception detection.
  CHECK(is_identical_word_exception({Letter::DP, Letter::DP}));
  CHECK(is_identical_word_exception({Letter::DP, Letter::P, Letter::DP}));
  CHECK(is_identical_word_exception({Letter::DP, Letter::P, Letter::P, Letter::DP}));
  CHECK(!is_identical_word_exception({Letter::DP, Letter::DP, Letter::P}));
  CHECK(!is_identical_word_exception({Letter::BP, Letter::P, Letter::DP}));

  const WordCounts counts =
      count_letters({Letter::X, Letter::DX, Letter::BX, Letter::DX});
  CHECK(counts.plain == 1);
  CHECK(counts.holo == 2);
  CHECK(counts.anti == 1);
  CHECK(counts.mixed_type());
}

TEST_CASE("property word checks on the stated examples") {
  Rng rng(137, "prop-words", 0);
  const ProjectorChain chain = build_chain(veronese_curve(3), rng.disk(2.0), 3);
  const WordContext ctx = WordContext::from_chain(chain, 1);

  // tr(X^n dX) = 0 for n <= 4.
  Word w = {Letter::DX};
  for (int n = 0; n <= 4; ++n) {
    CHECK(x_trace_residual(ctx, w) <= 1e-9);
    w.insert(w.begin(), Letter::X);
  }

  // dX dX X = i(c-2) dX dX.
  CHECK(identical_power_closed_form_residual(ctx, 1, true) <= 1e-9);

  // dX dX dX = 0 while dX dX stays generically nonzero on the mixed sheet.
  CHECK(identical_zero_residual(ctx, {Letter::DX, Letter::DX, Letter::DX}) <= 1e-9);
  CHECK((ctx.dx * ctx.dx).frobenius_norm() > 1e-6);

  // tr(X^n dbarX ddbarX) = 0 for n <= 3 (evaluated through the sample).
  const SurfaceSample s = weierstrass_surface(chain, 1);
  CMatrix xpow = CMatrix::identity(3);
  for (int n = 0; n <= 3; ++n) {
    CHECK(std::abs((xpow * s.dbx * s.dbdx).trace()) <= 1e-9);
    xpow = xpow * s.x;
  }

  // P_k X_k = X_k P_k = i(c_k - 1) P_k.
  const CMatrix target = (kI * (chain.c[1] - 1.0)) * ctx.p;
  CHECK((ctx.p * ctx.x - target).frobenius_norm() <= 1e-10);
  CHECK((ctx.x * ctx.p - target).frobenius_norm() <= 1e-10);
}

TEST_CASE("holomorphic-sheet words collapse to zero") {
  // On the k = 0 sheet, P dP = 0 identically, hence dX dX = dP P dP = 0.
  Rng rng(139, "holo-words", 0);
  const ProjectorChain chain = build_chain(veronese_curve(3), rng.disk(2.0), 2);
  const WordContext ctx = WordContext::from_chain(chain, 0);
  CHECK((ctx.p * ctx.dp).frobenius_norm() <= 1e-12);
  CHECK((ctx.dx * ctx.dx).frobenius_norm() <= 1e-12);
}
