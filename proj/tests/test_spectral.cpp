#include <doctest.h>

#include "cpnsurf/rng.hpp"
#include "cpnsurf/spectral.hpp"

using namespace cpn;

namespace {

ProjectorChain random_chain(int n, uint64_t salt) {
  Rng rng(211, "spectral-pt", salt);
  return build_chain(veronese_curve(n), rng.disk(2.0), 3);
}

VectorJet contaminated_seed(cplx xi0, int order) {
  VectorJet f = veronese_curve(2).seed_jet(xi0, order);
  const Jet2 xibar = Jet2::seed(std::conj(xi0), Var::xibar, order);
  f.at(0) += cplx{0.4, 0.0} * xibar;
  f.at(1) += cplx{0.3, 0.0} * (xibar * xibar);
  return f;
}

}  // namespace

TEST_CASE("u_matrices structure") {
  const ProjectorChain chain = random_chain(2, 0);

  // Purely imaginary lambda ties the two matrices by adjoint.
  const UMatrices u = u_matrices(chain, 0, {0.0, 0.7});
  CHECK((u.u1.value().dagger() + u.u2.value()).frobenius_norm() <= 1e-10);

  // lambda = 0: U1 = 2[dP, P] = 2i dX.
  const UMatrices u0 = u_matrices(chain, 0, {0.0, 0.0});
  const CMatrix dx = weierstrass_jet(chain, 0).derivative(1, 0);
  CHECK((u0.u1.value() - (2.0 * kI) * dx).frobenius_norm() <= 1e-12);

  CHECK_THROWS_AS(u_matrices(chain, 0, {1.0, 0.0}), Error);
}

TEST_CASE("zero curvature on solutions and its negative control") {
  for (int n : {2, 3}) {
    const ProjectorChain chain = random_chain(n, n);
    for (const cplx lam : {cplx{0.0, 0.3}, cplx{0.0, 1.0}, cplx{0.0, 2.0}}) {
      for (int k = 0; k < n; ++k) {
        CHECK(zero_curvature_residual(chain, k, lam) <= 1e-8);
      }
    }
  }

  // Broken (non-holomorphic) seed: the residual must be large at a generic
  // point and nonzero spectral parameter.
  Rng rng(223, "broken", 0);
  const cplx xi = rng.disk(1.5);
  const ProjectorChain broken = build_chain_from_seed(contaminated_seed(xi, 4), xi, 3, 1);
  CHECK(zero_curvature_residual(broken, 0, {0.0, 0.7}) > 1e-3);
}

TEST_CASE("wave function closed forms, inverse and Lax pair") {
  const ProjectorChain chain = random_chain(3, 1);
  const CMatrix I = CMatrix::identity(3);

  // k = 0 closed forms.
  Rng rng(227, "lam", 0);
  const cplx lam{0.0, rng.uniform(-2.0, 2.0)};
  const CMatrix p0 = chain.proj(0).value();
  const CMatrix phi0 = wavefunction(chain, 0, lam).value();
  const CMatrix phi0_closed = I - (2.0 / (1.0 - lam)) * p0;
  CHECK((phi0 - phi0_closed).frobenius_norm() <= 1e-12);
  const CMatrix inv0 = wavefunction_inverse(chain, 0, lam).value();
  const CMatrix inv0_closed = I - (2.0 / (1.0 + lam)) * p0;
  CHECK((inv0 - inv0_closed).frobenius_norm() <= 1e-12);
  CHECK((phi0 * inv0 - I).frobenius_norm() <= 1e-12);

  // lambda = 0 reduces every sheet's wave function to a reflection.
  for (int k = 0; k < 3; ++k) {
    const CMatrix phi = wavefunction(chain, k, {0.0, 0.0}).value();
    CHECK((phi - (I - 2.0 * chain.proj(k).value())).frobenius_norm() <= 1e-12);
    CHECK((phi * phi - I).frobenius_norm() <= 1e-12);
  }

  // Inverse and Lax residuals across sheets and parameters.
  for (int k = 0; k < 3; ++k) {
    for (const cplx l : {cplx{0.0, 0.5}, cplx{0.0, -1.5}, cplx{0.0, 3.0}}) {
      const CMatrix phi = wavefunction(chain, k, l).value();
      const CMatrix inv = wavefunction_inverse(chain, k, l).value();
      CHECK((phi * inv - I).frobenius_norm() <= 1e-10);
      CHECK((inv * phi - I).frobenius_norm() <= 1e-10);
      const auto lax = lax_residuals(chain, k, l);
      CHECK(lax.holomorphic <= 1e-8);
      CHECK(lax.antiholomorphic <= 1e-8);
    }
  }

  CHECK_THROWS_AS(wavefunction(chain, 0, {-1.0, 0.0}), Error);
}

TEST_CASE("Sym-Tafel surface: closed form, dual route, su(N) membership") {
  const ProjectorChain chain = random_chain(3, 2);
  Rng rng(229, "st", 0);
  for (int rep = 0; rep < 5; ++rep) {
    const SpectralParams params{cplx{0.0, rng.uniform(-2.5, 2.5)},
                                rng.uniform(0.2, 2.0)};
    for (int k = 0; k < 3; ++k) {
      const CMatrix a = sym_tafel_surface(chain, k, params);
      const CMatrix b = sym_tafel_via_lambda_derivative(chain, k, params);
      CHECK((a - b).frobenius_norm() <= 1e-9);
      CHECK(anti_hermiticity_residual(a) <= 1e-10);
      CHECK(std::abs(a.trace()) <= 1e-10);
    }
  }
}

TEST_CASE("Sym-Tafel coincides with Weierstrass at lambda^2 = 1 - 2 tau") {
  for (int n : {2, 3}) {
    const ProjectorChain chain = random_chain(n, 10 + n);
    for (double tau : {0.3, 0.5, 1.0, 2.0}) {
      const SpectralParams params{std::sqrt(cplx{1.0 - 2.0 * tau, 0.0}), tau};
      for (int k = 0; k < n; ++k) {
        const CMatrix xst = sym_tafel_surface(chain, k, params);
        const CMatrix xk = weierstrass_jet(chain, k).value();
        CHECK((xst - xk).frobenius_norm() <= 1e-10);
      }
    }
  }
  // tau = 1, lambda = i is the example instance: 1 - lambda^2 = 2 = 2 tau.
  const ProjectorChain chain = random_chain(2, 20);
  const SpectralParams params{cplx{0.0, 1.0}, 1.0};
  const CMatrix xst = sym_tafel_surface(chain, 0, params);
  const CMatrix x0 = weierstrass_jet(chain, 0).value();
  CHECK((xst - x0).frobenius_norm() <= 1e-12);
}

TEST_CASE("spectral-parameter root sets satisfy their scalar conditions") {
  for (int n : {2, 3, 4}) {
    for (double tau : {0.3, 0.5, 1.0, 2.0}) {
      for (const auto branch : {StBranch::holomorphic, StBranch::antiholomorphic}) {
        const auto roots = st_constraint_roots(branch, n, tau);
        REQUIRE(roots.size() == 4);
        // Roots come in +- pairs.
        CHECK(std::abs(roots[0] + roots[1]) <= 1e-12);
        CHECK(std::abs(roots[2] + roots[3]) <= 1e-12);
        for (const cplx& r : roots) {
          CHECK(st_scalar_condition_residual(branch, n, tau, r) <= 1e-9);
        }
      }
    }
  }
  // Generic lambda violates the condition.
  CHECK(st_scalar_condition_residual(StBranch::holomorphic, 3, 1.0, {0.0, 0.37}) >
        1e-3);
}

TEST_CASE("holomorphic branch contains the ST/Weierstrass coincidence root") {
  // lambda^2 = 1 - 2 tau is always among the holomorphic roots.
  for (double tau : {0.3, 1.0, 2.0}) {
    const auto roots = st_constraint_roots(StBranch::holomorphic, 3, tau);
    const cplx target = std::sqrt(cplx{1.0 - 2.0 * tau, 0.0});
    double best = 1e300;
    for (const cplx& r : roots) best = std::min(best, std::abs(r - target));
    CHECK(best <= 1e-12);
  }
}

TEST_CASE("mixed-constraint scan: coincidence point, continuity, reporting") {
  const ProjectorChain chain = random_chain(3, 3);
  std::vector<double> grid;
  for (double s = -3.0; s <= 3.0 + 1e-12; s += 0.05) grid.push_back(s);
  const auto rows = st_mixed_constraint_scan(chain, 1, 1.0, grid);
  REQUIRE(rows.size() == grid.size());
  for (const auto& row : rows) {
    if (row.pole) continue;
    CHECK(std::isfinite(row.residual_matrix));
    CHECK(std::isfinite(row.residual_sextic));
    // tau = 1: the ST surface equals X_1 at lambda = +-i and must satisfy
    // the cubic there.
    if (std::abs(std::abs(row.lambda_im) - 1.0) < 1e-9) {
      CHECK(row.residual_matrix <= 1e-9);
    }
  }
  CHECK_THROWS_AS(st_mixed_constraint_scan(chain, 0, 1.0, grid), Error);
}

TEST_CASE("st-lambda scan dips at the coincidence parameter") {
  const ProjectorChain chain = random_chain(2, 4);
  std::vector<double> grid;
  for (double s = -3.0; s <= 3.0 + 1e-12; s += 0.05) grid.push_back(s);
  const auto rows = st_lambda_scan(chain, 0, 1.0, grid);
  size_t best = 0;
  for (size_t i = 1; i < rows.size(); ++i)
    if (!rows[i].pole &&
        rows[i].st_weierstrass_distance < rows[best].st_weierstrass_distance)
      best = i;
  // tau = 1: minimum at lambda = +- i.
  CHECK(std::abs(std::abs(rows[best].lambda_im) - 1.0) <= 0.051);
}

TEST_CASE("top-sheet wave function matches the printed closed form") {
  for (int n : {2, 3, 4}) {
    const ProjectorChain chain = random_chain(n, 30 + n);
    Rng rng(233, "top", n);
    const cplx lam{0.0, rng.uniform(-2.0, 2.0)};
    CHECK(top_sheet_wavefunction_proportionality(chain, lam) <= 1e-10);
  }
}

TEST_CASE("spectral parameter validation") {
  SpectralParams good{cplx{0.0, 0.5}, 1.0};
  CHECK_NOTHROW(good.validate());
  SpectralParams pole{cplx{1.0, 0.0}, 1.0};
  CHECK_THROWS_AS(pole.validate(), Error);
  SpectralParams bad_tau{cplx{0.0, 0.5}, -1.0};
  CHECK_THROWS_AS(bad_tau.validate(), Error);
  SpectralParams off_axis{cplx{0.3, 0.5}, 1.0};
  CHECK_THROWS_AS(off_axis.validate(), Error);
}
