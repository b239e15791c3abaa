#include <doctest.h>

#include "cpnsurf/chain.hpp"
#include "cpnsurf/rng.hpp"
#include "oracle.hpp"

using namespace cpn;

namespace {

// Constant chain: projectors onto the coordinate axes, no xi dependence.
ProjectorChain constant_chain(int n, int order = 3) {
  ProjectorChain chain;
  chain.n = n;
  chain.base_point = {0.0, 0.0};
  for (int k = 0; k < n; ++k) {
    MatrixJet p(n, order);
    p.at(k, k) = Jet2::constant(1.0, order);
    chain.p.push_back(p);
    chain.c.push_back(level_constant(k, n));
  }
  return chain;
}

}  // namespace

TEST_CASE("veronese curve components") {
  const HolomorphicCurve v2 = veronese_curve(2);
  CHECK(v2.coeffs[0].size() == 1);
  CHECK(v2.coeffs[0][0] == cplx{1.0, 0.0});
  CHECK(v2.coeffs[1][1] == cplx{1.0, 0.0});

  const HolomorphicCurve v3 = veronese_curve(3);
  CHECK(std::abs(v3.coeffs[1][1] - std::sqrt(2.0)) <= 1e-15);
  CHECK(v3.coeffs[2][2] == cplx{1.0, 0.0});

  CHECK_THROWS_AS(veronese_curve(1), Error);
}

TEST_CASE("projector_from_vector on the stated examples") {
  // Constant axis vector.
  VectorJet axis(2, 3);
  axis.at(0) = Jet2::constant(1.0, 3);
  const CMatrix p0 = projector_from_vector(axis).value();
  CHECK(std::abs(p0(0, 0) - 1.0) <= 1e-15);
  CHECK(std::abs(p0(1, 1)) <= 1e-15);

  // f = (1, xi) at xi = 1: all entries 1/2.
  const VectorJet f = veronese_curve(2).seed_jet({1.0, 0.0}, 3);
  const CMatrix p = projector_from_vector(f).value();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(std::abs(p(i, j) - 0.5) <= 1e-14);

  // Vanishing seed.
  VectorJet zero(2, 3);
  CHECK_THROWS_WITH_AS(projector_from_vector(zero),
                       "projector_from_vector: singular normalization", Error);
}

TEST_CASE("raise and lower on the stated examples") {
  const VectorJet f = veronese_curve(2).seed_jet({0.0, 0.0}, 4);
  const MatrixJet p = projector_from_vector(f);

  const VectorJet up = raise_step(f, p);
  CHECK(std::abs(up.at(0).value()) <= 1e-15);
  CHECK(std::abs(up.at(1).value() - cplx{1.0, 0.0}) <= 1e-15);

  // Holomorphic seed: the lowering map vanishes identically.
  const VectorJet down = lower_step(f, p);
  CHECK(std::abs(down.at(0).value()) <= 1e-15);
  CHECK(std::abs(down.at(1).value()) <= 1e-15);

  // Orthogonality f^dagger . raise(f) = 0.
  const cplx ip = f.truncated(up.order()).inner(up).value();
  CHECK(std::abs(ip) <= 1e-12);

  VectorJet order0(2, 0);
  order0.at(0) = Jet2::constant(1.0, 0);
  CHECK_THROWS_AS(raise_step(order0, p.truncated(0)), Error);
}

TEST_CASE("build_chain N=2 at xi=1 reproduces the explicit projectors") {
  const ProjectorChain chain = build_chain(veronese_curve(2), {1.0, 0.0}, 3);
  const CMatrix p0 = chain.proj(0).value();
  const CMatrix p1 = chain.proj(1).value();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CHECK(std::abs(p0(i, j) - 0.5) <= 1e-14);
      const double expected = (i == j) ? 0.5 : -0.5;
      CHECK(std::abs(p1(i, j) - expected) <= 1e-14);
    }
}

TEST_CASE("chain axioms hold at random points for N = 2, 3, 4") {
  for (int n : {2, 3, 4}) {
    for (int rep = 0; rep < (n == 3 ? 20 : 10); ++rep) {
      Rng rng(61, "chain-axioms", static_cast<uint64_t>(100 * n + rep));
      const ProjectorChain chain = build_chain(veronese_curve(n), rng.disk(2.0), 3);
      CHECK(projector_axiom_residuals(chain).max() <= 1e-10);
    }
  }
}

TEST_CASE("chain matches the Gram-Schmidt oracle pointwise") {
  const HolomorphicCurve curve = veronese_curve(3);
  for (int rep = 0; rep < 5; ++rep) {
    Rng rng(67, "gs-oracle", rep);
    const cplx xi = rng.disk(2.0);
    const ProjectorChain chain = build_chain(curve, xi, 2);
    for (int k = 0; k < 3; ++k) {
      const CMatrix expected = oracle::projector(curve, xi, k);
      CHECK((chain.proj(k).value() - expected).frobenius_norm() <= 1e-10);
    }
  }
}

TEST_CASE("jet derivatives match the finite-difference oracle") {
  const HolomorphicCurve curve = veronese_curve(3);
  for (int rep = 0; rep < 5; ++rep) {
    Rng rng(71, "fd-oracle", rep);
    const cplx xi = rng.disk(1.5);
    const ProjectorChain chain = build_chain(curve, xi, 3);
    for (int k = 0; k < 3; ++k) {
      const auto field = oracle::projector_field(curve, k);
      const MatrixJet& p = chain.proj(k);
      CHECK((p.derivative(1, 0) - oracle::d_holo(field, xi)).max_abs() <= 1e-6);
      CHECK((p.derivative(0, 1) - oracle::d_anti(field, xi)).max_abs() <= 1e-6);
      const auto second = oracle::second_derivatives(field, xi);
      CHECK((p.derivative(1, 1) - second.ddbar).max_abs() <= 1e-6);
      CHECK((p.derivative(2, 0) - second.d2).max_abs() <= 1e-6);
      CHECK((p.derivative(0, 2) - second.dbar2).max_abs() <= 1e-6);
    }
  }
}

TEST_CASE("rank-deficient curves are refused") {
  HolomorphicCurve curve;
  curve.n = 3;
  curve.coeffs = {{cplx{1.0, 0.0}},
                  {cplx{0.0, 0.0}, cplx{1.0, 0.0}},
                  {cplx{0.0, 0.0}, cplx{2.0, 0.0}}};
  CHECK_THROWS_AS(build_chain(curve, {0.3, 0.4}, 3), Error);
}

TEST_CASE("el and conservation residuals") {
  for (int n : {2, 3}) {
    Rng rng(73, "el", n);
    const ProjectorChain chain = build_chain(veronese_curve(n), rng.disk(2.0), 3);
    for (int k = 0; k < n; ++k) {
      CHECK(el_residual(chain, k) <= 1e-9);
      CHECK(conservation_residual(chain, k) <= 1e-9);
    }
  }
  // Constant chain: all derivatives vanish.
  const ProjectorChain constant = constant_chain(3);
  CHECK(el_residual(constant, 1) == doctest::Approx(0.0));
  CHECK(conservation_residual(constant, 1) == doctest::Approx(0.0));
}

TEST_CASE("conservation expands to twice the EL commutator") {
  // d[dbarP, P] + dbar[dP, P] = 2 [d dbar P, P] for projector fields, so the
  // two residuals track each other.
  Rng rng(79, "cons", 1);
  const ProjectorChain chain = build_chain(veronese_curve(3), rng.disk(2.0), 3);
  for (int k = 0; k < 3; ++k) {
    CHECK(conservation_residual(chain, k) <= 2.0 * el_residual(chain, k) + 1e-12);
  }
}

TEST_CASE("lagrangian density on the stated examples") {
  // N = 2, k = 0 at the origin: tr[dP dbarP] = 1.
  const ProjectorChain chain = build_chain(veronese_curve(2), {0.0, 0.0}, 3);
  CHECK(lagrangian_density(chain, 0) == doctest::Approx(1.0).epsilon(1e-12));

  const ProjectorChain constant = constant_chain(2);
  CHECK(lagrangian_density(constant, 0) == doctest::Approx(0.0));

  // Translation invariance: the translated curve evaluated at the
  // translated point reproduces the density.
  HolomorphicCurve shifted;
  shifted.n = 2;
  const cplx c{0.7, -0.2};
  // (1, xi + c) expanded in xi.
  shifted.coeffs = {{cplx{1.0, 0.0}}, {c, cplx{1.0, 0.0}}};
  const cplx xi0{0.4, 0.3};
  const ProjectorChain base = build_chain(veronese_curve(2), xi0 + c, 3);
  const ProjectorChain moved = build_chain(shifted, xi0, 3);
  CHECK(lagrangian_density(base, 0) ==
        doctest::Approx(lagrangian_density(moved, 0)).epsilon(1e-11));
}

TEST_CASE("chain construction rejects vanishing seeds") {
  HolomorphicCurve curve;
  curve.n = 2;
  // (xi, xi^2) vanishes at the origin.
  curve.coeffs = {{cplx{0.0, 0.0}, cplx{1.0, 0.0}},
                  {cplx{0.0, 0.0}, cplx{0.0, 0.0}, cplx{1.0, 0.0}}};
  CHECK_THROWS_AS(build_chain(curve, {0.0, 0.0}, 2), Error);
  CHECK_NOTHROW(build_chain(curve, {1.0, 0.0}, 2));
}
