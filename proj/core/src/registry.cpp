#include "cpnsurf/property_suite.hpp"

#include <algorithm>
#include <cmath>
#include <map>

// The case registry. Each case samples admissible points deterministically
// from (seed, case id, sample index) and returns the worst residual it saw
// at that sample. Ids are hierarchical so prefix filters select coherent
// groups: P2.* for the projector formalism, P3.* for the Weierstrass
// surface properties, P4.* for the Euclidean spectral sector, M4.* for the
// Minkowski sector, NEG.* for broken-model controls.

namespace cpn {
namespace {

cplx sample_point(uint64_t seed, const std::string& id, uint64_t idx,
                  const HolomorphicCurve& curve) {
  Rng rng(seed, id, idx);
  const auto probes = fixed_probe_points();
  cplx xi = idx < probes.size() ? probes[idx] : rng.disk(2.0);
  for (int tries = 0; tries < 100 && curve.norm_at(xi) <= 1e-6; ++tries) {
    xi = rng.disk(2.0);
  }
  return xi;
}

ProjectorChain sample_chain(int n, uint64_t seed, const std::string& id,
                            uint64_t idx, int order = 3) {
  const HolomorphicCurve curve = veronese_curve(n);
  return build_chain(curve, sample_point(seed, id, idx, curve), order);
}

int cycle_dim(const std::vector<int>& dims, uint64_t idx) {
  return dims[idx % dims.size()];
}

double max_over_sheets(const ProjectorChain& chain,
                       const std::function<double(int)>& f) {
  double m = 0.0;
  for (int k = 0; k < chain.n; ++k) m = std::max(m, f(k));
  return m;
}

Word alternating_word(int len, Letter first, Letter second) {
  Word w;
  for (int i = 0; i < len; ++i) w.push_back(i % 2 == 0 ? first : second);
  return w;
}

Word random_word(Rng& rng, const std::vector<Letter>& alphabet, int min_len,
                 int max_len) {
  const int len = min_len + static_cast<int>(rng.next_u64() %
                                             (max_len - min_len + 1));
  Word w;
  w.reserve(len);
  for (int i = 0; i < len; ++i)
    w.push_back(alphabet[rng.next_u64() % alphabet.size()]);
  return w;
}

// Non-holomorphic seed: the Veronese curve with xibar contamination in the
// first two components. A purely anti-holomorphic seed would still solve
// the EL equation (anti-instantons are solutions) and would degenerate the
// raising recurrence, so the broken model mixes both variables.
VectorJet contaminated_seed(int n, cplx xi0, int order) {
  const HolomorphicCurve curve = veronese_curve(n);
  VectorJet f = curve.seed_jet(xi0, order);
  const Jet2 xibar = Jet2::seed(std::conj(xi0), Var::xibar, order);
  f.at(0) += cplx{0.4, 0.0} * xibar;
  f.at(1) += cplx{0.3, 0.0} * (xibar * xibar);
  return f;
}

// --- case evaluators -------------------------------------------------------

double eval_axioms(uint64_t seed, uint64_t idx, const std::string& id,
                   const std::vector<int>& dims) {
  const ProjectorChain chain = sample_chain(cycle_dim(dims, idx), seed, id, idx);
  return projector_axiom_residuals(chain).max();
}

double eval_scale_invariance(uint64_t seed, uint64_t idx, const std::string& id) {
  const int n = cycle_dim({2, 3, 4}, idx);
  const HolomorphicCurve curve = veronese_curve(n);
  const cplx xi = sample_point(seed, id, idx, curve);
  Rng rng(seed, id + "/scale", idx);
  const cplx scale = rng.gaussian_cplx() + cplx{3.0, 0.0};
  VectorJet f = curve.seed_jet(xi, 3);
  VectorJet g = f;
  for (int i = 0; i < n; ++i) g.at(i) *= scale;
  const CMatrix pf = projector_from_vector(f).value();
  const CMatrix pg = projector_from_vector(g).value();
  return (pf - pg).frobenius_norm();
}

double eval_recurrence(uint64_t seed, uint64_t idx, const std::string& id) {
  const int n = cycle_dim({2, 3, 4}, idx);
  const HolomorphicCurve curve = veronese_curve(n);
  const cplx xi = sample_point(seed, id, idx, curve);
  VectorJet f = curve.seed_jet(xi, n + 2);
  double worst = 0.0;
  // Holomorphic seed: the lowering map must vanish.
  {
    const MatrixJet p0 = projector_from_vector(f);
    const VectorJet low = lower_step(f, p0);
    double nn = 0.0;
    for (int i = 0; i < n; ++i) nn += std::norm(low.at(i).value());
    worst = std::max(worst, std::sqrt(nn));
  }
  // f_k^dagger . raise(f_k) = 0 along the chain.
  for (int k = 0; k + 1 < n; ++k) {
    const MatrixJet p = projector_from_vector(f);
    const VectorJet up = raise_step(f, p);
    const cplx ip = f.truncated(up.order()).inner(up).value();
    const double scale = std::max(1.0, std::sqrt(std::abs(f.norm_sq().value())));
    worst = std::max(worst, std::abs(ip) / scale);
    f = up;
  }
  return worst;
}

double eval_el(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3, 4}, idx), seed, id, idx);
  return max_over_sheets(chain, [&](int k) { return el_residual(chain, k); });
}

double eval_lagrangian(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3, 4}, idx), seed, id, idx);
  return max_over_sheets(chain, [&](int k) {
    const MatrixJet& p = chain.proj(k);
    const cplx l = (p.derivative(1, 0) * p.derivative(0, 1)).trace();
    return std::max(std::abs(l.imag()), std::max(0.0, -l.real()));
  });
}

double eval_conservation(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3, 4}, idx), seed, id, idx);
  return max_over_sheets(chain,
                         [&](int k) { return conservation_residual(chain, k); });
}

double eval_surface_su(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3, 4}, idx), seed, id, idx);
  return max_over_sheets(chain, [&](int k) {
    const SurfaceSample s = weierstrass_surface(chain, k);
    const double anti = anti_hermiticity_residual(s.x);
    const double tr = std::abs(s.x.trace());
    const double reality = (s.dx.dagger() + s.dbx).frobenius_norm();
    const double c = chain.c[k];
    const double tr_sq =
        std::abs((s.x * s.x).trace() - cplx{1.0 + chain.n * c * (c - 2.0), 0.0});
    return std::max({anti, tr, reality, tr_sq});
  });
}

double eval_roundtrip(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3, 4}, idx), seed, id, idx);
  return max_over_sheets(chain, [&](int k) {
    const SurfaceSample s = weierstrass_surface(chain, k);
    const CMatrix p = projector_from_surface(s.x, k, chain.n);
    return (p - chain.proj(k).value()).frobenius_norm();
  });
}

double eval_tangents(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3, 4}, idx), seed, id, idx);
  return max_over_sheets(
      chain, [&](int k) { return tangents_two_ways(chain, k).max_residual; });
}

double eval_comm_identity(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3, 4}, idx), seed, id, idx);
  return max_over_sheets(chain, [&](int k) {
    const MatrixJet& p = chain.proj(k);
    const CMatrix pv = p.value();
    const CMatrix dp = p.derivative(1, 0);
    const CMatrix bp = p.derivative(0, 1);
    const MatrixJet sj = chain.partial_sum(k);
    const CMatrix ds = sj.derivative(1, 0);
    const CMatrix bs = sj.derivative(0, 1);
    const double r1 = (commutator(dp, pv) - dp - 2.0 * ds).frobenius_norm();
    const double r2 = (commutator(bp, pv) + bp + 2.0 * bs).frobenius_norm();
    return std::max(r1, r2);
  });
}

double eval_involution(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3, 4}, idx), seed, id, idx);
  const CMatrix I = CMatrix::identity(chain.n);
  return max_over_sheets(chain, [&](int k) {
    const CMatrix p = chain.proj(k).value();
    const CMatrix refl = I - 2.0 * p;
    const double r1 = (refl * refl - I).frobenius_norm();
    const double r2 = ((I - p) * p).frobenius_norm();
    return std::max(r1, r2);
  });
}

double eval_projector_spectrum(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3, 4}, idx), seed, id, idx);
  return max_over_sheets(chain, [&](int k) {
    const auto ev = hermitian_eigenvalues(chain.proj(k).value(), 1e-8);
    double worst = 0.0;
    for (size_t i = 0; i < ev.size(); ++i) {
      const double expected = (i + 1 == ev.size()) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(ev[i] - expected));
    }
    return worst;
  });
}

double eval_anticom(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3, 4}, idx), seed, id, idx);
  return max_over_sheets(chain, [&](int k) {
    const WordContext c = WordContext::from_chain(chain, k);
    const double r1 = (anticommutator(c.dp, c.p) - c.dp).frobenius_norm();
    const double r2 = (anticommutator(c.bp, c.p) - c.bp).frobenius_norm();
    return std::max(r1, r2);
  });
}

double eval_sandwich(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3, 4}, idx), seed, id, idx);
  return max_over_sheets(chain, [&](int k) {
    const WordContext c = WordContext::from_chain(chain, k);
    return std::max((c.p * c.dp * c.p).frobenius_norm(),
                    (c.p * c.bp * c.p).frobenius_norm());
  });
}

double eval_exchange(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3, 4}, idx), seed, id, idx);
  Rng rng(seed, id + "/words", idx);
  return max_over_sheets(chain, [&](int k) {
    const WordContext c = WordContext::from_chain(chain, k);
    double worst = 0.0;
    for (int len = 2; len <= 8; ++len) {
      worst = std::max(worst, projector_exchange_residual(
                                  c, alternating_word(len, Letter::DP, Letter::BP)));
    }
    for (int i = 0; i < 100; ++i) {
      const Word w = random_word(rng, {Letter::DP, Letter::BP}, 1, 8);
      worst = std::max(worst, projector_exchange_residual(c, w));
    }
    return worst;
  });
}

double eval_partial_sums(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3, 4}, idx), seed, id, idx);
  return max_over_sheets(chain, [&](int k) {
    const WordContext c = WordContext::from_chain(chain, k);
    const MatrixJet below_j = chain.partial_sum(k);
    const CMatrix below = below_j.value();
    const CMatrix upto = below + c.p;
    double worst = 0.0;
    auto acc = [&](const CMatrix& lhs, const CMatrix& rhs) {
      worst = std::max(worst, (lhs - rhs).frobenius_norm());
    };
    const CMatrix zero = CMatrix::zero(chain.n);
    acc(c.p * upto, c.p);
    acc(c.p * below, zero);
    acc(below * c.p, zero);
    acc(c.dp * upto, c.dp);
    acc(upto * c.dp, c.p * c.dp);
    acc(c.bp * upto, c.bp * c.p);
    acc(upto * c.bp, c.bp);
    acc(c.dp * below, c.p * c.dp);
    acc(below * c.dp, zero);
    acc(c.bp * below, zero);
    acc(below * c.bp, c.bp * c.p);
    // j < k: P_j times the full lower sum reproduces P_j.
    for (int j = 0; j < k; ++j) {
      const CMatrix pj = chain.proj(j).value();
      acc(pj * below, pj);
    }
    return worst;
  });
}

double eval_deriv_traces(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3, 4}, idx), seed, id, idx);
  return max_over_sheets(chain, [&](int k) {
    const MatrixJet& pj = chain.proj(k);
    const WordContext c = WordContext::from_chain(chain, k);
    const CMatrix d2p = pj.derivative(2, 0);
    const CMatrix db2p = pj.derivative(0, 2);
    const CMatrix ddbp = pj.derivative(1, 1);
    double worst = 0.0;
    auto acc = [&](cplx v) { worst = std::max(worst, std::abs(v)); };
    acc((c.p * c.dp).trace());
    acc((c.p * c.bp).trace());
    acc((c.p * d2p).trace() + (c.dp * c.dp).trace());
    acc((c.p * db2p).trace() + (c.bp * c.bp).trace());
    acc((c.p * ddbp).trace() + (c.dp * c.bp).trace());
    acc((c.dp * c.dp * c.p).trace());
    acc((c.dp * c.dp).trace());
    acc((c.bp * c.bp * c.p).trace());
    acc((c.bp * c.bp).trace());
    acc((c.p * c.dp * ddbp).trace());
    acc((c.p * c.bp * ddbp).trace());
    acc((ddbp * c.dp).trace());
    acc((ddbp * c.bp).trace());
    return worst;
  });
}

double eval_schwarz(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3, 4}, idx), seed, id, idx);
  return max_over_sheets(chain, [&](int k) {
    const MatrixJet& pj = chain.proj(k);
    const CMatrix a = pj.deriv_xi().derivative(0, 1);
    const CMatrix b = pj.deriv_xibar().derivative(1, 0);
    return (a - b).frobenius_norm();
  });
}

double eval_compression(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3, 4}, idx), seed, id, idx);
  Rng rng(seed, id + "/A", idx);
  const CMatrix a = rng.gaussian_matrix(chain.n);
  const double scale = std::max(1.0, a.frobenius_norm());
  return max_over_sheets(chain, [&](int k) {
    const CMatrix p = chain.proj(k).value();
    return (p * a * p - (p * a).trace() * p).frobenius_norm() / scale;
  });
}

double eval_even_collapse(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3, 4}, idx), seed, id, idx);
  Rng rng(seed, id + "/words", idx);
  return max_over_sheets(chain, [&](int k) {
    const WordContext c = WordContext::from_chain(chain, k);
    double worst = 0.0;
    for (int len = 2; len <= 8; len += 2) {
      worst = std::max(worst, even_word_collapse_residual(
                                  c, alternating_word(len, Letter::DP, Letter::BP)));
    }
    for (int i = 0; i < 100; ++i) {
      Word w = random_word(rng, {Letter::DP, Letter::BP}, 1, 4);
      if (count_letters(w).deriv % 2 != 0) w.push_back(w.back() == Letter::DP
                                                           ? Letter::BP
                                                           : Letter::DP);
      worst = std::max(worst, even_word_collapse_residual(c, w));
    }
    return worst;
  });
}

double eval_odd_identical(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3, 4}, idx), seed, id, idx);
  return max_over_sheets(chain, [&](int k) {
    const WordContext c = WordContext::from_chain(chain, k);
    double worst = 0.0;
    for (Letter l : {Letter::DP, Letter::BP}) {
      for (int len : {3, 5}) {
        const Word w(len, l);
        const CMatrix wv = eval_word(c, w);
        const CMatrix d = (l == Letter::DP) ? c.dp : c.bp;
        const cplx t = (wv * c.p).trace();
        worst = std::max(worst, (wv - t * d).frobenius_norm());
      }
    }
    return worst;
  });
}

double eval_zero_products(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3, 4}, idx), seed, id, idx);
  Rng rng(seed, id + "/words", idx);
  return max_over_sheets(chain, [&](int k) {
    const WordContext c = WordContext::from_chain(chain, k);
    double worst = 0.0;
    for (Letter l : {Letter::DP, Letter::BP}) {
      const Word canon[4] = {{l, l, Letter::P},
                             {Letter::P, l, l},
                             {l, l, l},
                             {l, l, l, l, l}};
      for (const Word& w : canon)
        worst = std::max(worst, identical_zero_residual(c, w));
      for (int i = 0; i < 100; ++i) {
        const Word w = random_word(rng, {Letter::P, l}, 2, 8);
        const WordCounts counts = count_letters(w);
        if (counts.deriv < 2 || is_identical_word_exception(w)) continue;
        worst = std::max(worst, identical_zero_residual(c, w));
      }
    }
    return worst;
  });
}

double eval_exception_generic(uint64_t seed, uint64_t /*idx*/, const std::string& id) {
  // dP P dP must be generically nonzero on a mixed sheet: 8 of 10 points.
  int hits = 0;
  for (uint64_t i = 0; i < 10; ++i) {
    Rng rng(seed, id + "/pts", i);
    const cplx xi = rng.disk(2.0);
    const ProjectorChain chain = build_chain(veronese_curve(3), xi, 3);
    const WordContext c = WordContext::from_chain(chain, 1);
    const Word w = {Letter::DP, Letter::P, Letter::DP};
    if (eval_word(c, w).frobenius_norm() > 1e-6) ++hits;
  }
  return hits >= 8 ? 0.0 : 1.0;
}

double eval_odd_trace(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3, 4}, idx), seed, id, idx);
  Rng rng(seed, id + "/words", idx);
  return max_over_sheets(chain, [&](int k) {
    const WordContext c = WordContext::from_chain(chain, k);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const Word w = random_word(rng, {Letter::P, Letter::DP, Letter::BP}, 1, 8);
      if (count_letters(w).deriv % 2 == 0) continue;
      worst = std::max(worst, odd_trace_residual(c, w));
    }
    return worst;
  });
}

double eval_factorization(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3, 4}, idx), seed, id, idx);
  Rng rng(seed, id + "/words", idx);
  const CMatrix a = rng.gaussian_matrix(chain.n);
  const double scale = std::max(1.0, a.frobenius_norm());
  return max_over_sheets(chain, [&](int k) {
    const WordContext c = WordContext::from_chain(chain, k);
    double worst = 0.0;
    for (int len = 2; len <= 8; len += 2) {
      const Word w = alternating_word(len, Letter::DP, Letter::BP);
      worst = std::max(worst, trace_factorization_residual(c, w, a) / scale);
    }
    for (int i = 0; i < 100; ++i) {
      Word w = random_word(rng, {Letter::DP, Letter::BP}, 1, 4);
      if (count_letters(w).deriv % 2 != 0) w.push_back(w.back() == Letter::DP
                                                           ? Letter::BP
                                                           : Letter::DP);
      worst = std::max(worst, trace_factorization_residual(c, w, a) / scale);
    }
    return worst;
  });
}

// --- section 3 -------------------------------------------------------------

double eval_linear_dependence(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3, 4}, idx), seed, id, idx);
  const auto r = linear_dependence_check(chain);
  return std::max(r.alternating, r.weighted);
}

double eval_minimal_poly(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3, 4}, idx), seed, id, idx);
  return max_over_sheets(chain, [&](int k) {
    const SurfaceSample s = weierstrass_surface(chain, k);
    return matrix_poly_residual(s.x, minimal_poly_roots(k, chain.n));
  });
}

double eval_spectrum_containment(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3, 4}, idx), seed, id, idx);
  return max_over_sheets(chain, [&](int k) {
    const SurfaceSample s = weierstrass_surface(chain, k);
    const auto roots = minimal_poly_roots(k, chain.n);
    // i X_k is Hermitian; its eigenvalues must sit inside the root set of
    // the minimal polynomial (times i).
    const auto ev = hermitian_eigenvalues(kI * s.x, 1e-8);
    double worst = 0.0;
    for (double v : ev) {
      double best = 1e300;
      for (const cplx& r : roots) best = std::min(best, std::abs(v - (kI * r).real()));
      worst = std::max(worst, best);
    }
    return worst;
  });
}

double eval_surface_el(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3, 4}, idx), seed, id, idx);
  return max_over_sheets(chain, [&](int k) {
    return surface_el_residual(weierstrass_surface(chain, k));
  });
}

double eval_mixed_second(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3, 4}, idx), seed, id, idx);
  return max_over_sheets(
      chain, [&](int k) { return mixed_second_derivative_residual(chain, k); });
}

double eval_killing(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3, 4}, idx), seed, id, idx);
  double worst = 0.0;
  std::vector<CMatrix> xs;
  for (int k = 0; k < chain.n; ++k)
    xs.push_back(weierstrass_jet(chain, k).value());
  for (int k = 0; k < chain.n; ++k)
    for (int m = k; m < chain.n; ++m) {
      const double numeric = killing_inner(xs[k], xs[m]);
      worst = std::max(worst,
                       std::abs(numeric - killing_closed_form(k, m, chain.n)));
    }
  return worst;
}

double eval_pkxk(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3, 4}, idx), seed, id, idx);
  return max_over_sheets(chain, [&](int k) {
    const CMatrix p = chain.proj(k).value();
    const CMatrix x = weierstrass_jet(chain, k).value();
    const CMatrix target = (kI * (chain.c[k] - 1.0)) * p;
    return std::max((p * x - target).frobenius_norm(),
                    (x * p - target).frobenius_norm());
  });
}

double eval_x_products_vanish(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3, 4}, idx), seed, id, idx);
  Rng rng(seed, id + "/words", idx);
  return max_over_sheets(chain, [&](int k) {
    const WordContext c = WordContext::from_chain(chain, k);
    double worst = 0.0;
    for (Letter l : {Letter::DX, Letter::BX}) {
      worst = std::max(worst, identical_zero_residual(c, {l, l, l}));
      for (int i = 0; i < 100; ++i) {
        const Word w = random_word(rng, {Letter::X, l}, 3, 8);
        if (count_letters(w).deriv < 3) continue;
        worst = std::max(worst, identical_zero_residual(c, w));
      }
    }
    return worst;
  });
}

double eval_dxdx_generic(uint64_t seed, uint64_t /*idx*/, const std::string& id) {
  // dX dX != 0 generically on the mixed sheet, while dX dX dX = 0 always.
  int hits = 0;
  double cube = 0.0;
  for (uint64_t i = 0; i < 10; ++i) {
    Rng rng(seed, id + "/pts", i);
    const cplx xi = rng.disk(2.0);
    const ProjectorChain chain = build_chain(veronese_curve(3), xi, 3);
    const WordContext c = WordContext::from_chain(chain, 1);
    if ((c.dx * c.dx).frobenius_norm() > 1e-6) ++hits;
    cube = std::max(cube, (c.dx * c.dx * c.dx).frobenius_norm());
  }
  if (hits < 8) return 1.0;
  return cube;
}

double eval_x_traces_vanish(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3, 4}, idx), seed, id, idx);
  Rng rng(seed, id + "/words", idx);
  return max_over_sheets(chain, [&](int k) {
    const WordContext c = WordContext::from_chain(chain, k);
    double worst = 0.0;
    for (Letter l : {Letter::DX, Letter::BX}) {
      // tr(X^n dX) for n <= 4.
      Word w = {l};
      for (int n = 0; n <= 4; ++n) {
        worst = std::max(worst, x_trace_residual(c, w));
        w.insert(w.begin(), Letter::X);
      }
      for (int i = 0; i < 100; ++i) {
        const Word rw = random_word(rng, {Letter::X, l}, 1, 8);
        if (count_letters(rw).deriv < 1) continue;
        worst = std::max(worst, x_trace_residual(c, rw));
      }
    }
    return worst;
  });
}

double eval_second_traces(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3, 4}, idx), seed, id, idx);
  return max_over_sheets(chain, [&](int k) {
    const SurfaceSample s = weierstrass_surface(chain, k);
    double worst = 0.0;
    auto acc = [&](cplx v) { worst = std::max(worst, std::abs(v)); };
    acc((s.x * s.d2x).trace());
    acc((s.x * s.d2x).trace() + (s.dx * s.dx).trace());
    acc((s.x * s.db2x).trace());
    acc((s.x * s.db2x).trace() + (s.dbx * s.dbx).trace());
    acc((s.x * s.dbdx).trace() + (s.dx * s.dbx).trace());
    acc((s.dbdx * s.dx).trace());
    acc((s.dbdx * s.dbx).trace());
    return worst;
  });
}

double eval_p7_traces(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3, 4}, idx), seed, id, idx);
  return max_over_sheets(chain, [&](int k) {
    const SurfaceSample s = weierstrass_surface(chain, k);
    return std::max(std::abs((s.dbdx * s.d2x).trace()),
                    std::abs((s.dbdx * s.db2x).trace()));
  });
}

double eval_tangent_self(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3, 4}, idx), seed, id, idx);
  return max_over_sheets(chain, [&](int k) {
    const auto r = tangent_self_identity(weierstrass_surface(chain, k));
    return std::max(r.holomorphic, r.antiholomorphic);
  });
}

double eval_x_shift(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3, 4}, idx), seed, id, idx);
  Rng rng(seed, id + "/words", idx);
  return max_over_sheets(chain, [&](int k) {
    const WordContext c = WordContext::from_chain(chain, k);
    double worst = 0.0;
    for (int len = 1; len <= 8; ++len) {
      worst = std::max(
          worst, x_shift_residual(c, alternating_word(len, Letter::DX, Letter::BX)));
    }
    for (int i = 0; i < 100; ++i) {
      const Word w = random_word(rng, {Letter::DX, Letter::BX}, 1, 8);
      worst = std::max(worst, x_shift_residual(c, w));
    }
    return worst;
  });
}

double eval_mixed_trace_parity(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3, 4}, idx), seed, id, idx);
  Rng rng(seed, id + "/words", idx);
  return max_over_sheets(chain, [&](int k) {
    const WordContext c = WordContext::from_chain(chain, k);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const Word w = random_word(rng, {Letter::X, Letter::DX, Letter::BX}, 1, 8);
      const WordCounts counts = count_letters(w);
      if (counts.holo == counts.anti) continue;
      worst = std::max(worst, x_trace_residual(c, w));
    }
    return worst;
  });
}

double eval_p11_traces(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3, 4}, idx), seed, id, idx);
  return max_over_sheets(chain, [&](int k) {
    const SurfaceSample s = weierstrass_surface(chain, k);
    double worst = 0.0;
    CMatrix xpow = CMatrix::identity(chain.n);
    for (int n = 0; n <= 3; ++n) {
      worst = std::max(worst, std::abs((xpow * s.dbx * s.dbdx).trace()));
      worst = std::max(worst, std::abs((xpow * s.dx * s.dbdx).trace()));
      xpow = xpow * s.x;
    }
    return worst;
  });
}

double eval_p12_identical(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3, 4}, idx), seed, id, idx);
  return max_over_sheets(chain, [&](int k) {
    const WordContext c = WordContext::from_chain(chain, k);
    double worst = 0.0;
    for (int n = 1; n <= 3; ++n) {
      worst = std::max(worst, identical_power_closed_form_residual(c, n, true));
      worst = std::max(worst, identical_power_closed_form_residual(c, n, false));
      // The dX dX form also equals dP dP (and the mirror equals dbP dbP).
      worst = std::max(worst, ((c.dx * c.dx) - (c.dp * c.dp)).frobenius_norm());
      worst = std::max(worst, ((c.bx * c.bx) - (c.bp * c.bp)).frobenius_norm());
    }
    return worst;
  });
}

double eval_p12_mixed(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3, 4}, idx), seed, id, idx);
  return max_over_sheets(chain, [&](int k) {
    const WordContext c = WordContext::from_chain(chain, k);
    double worst = 0.0;
    for (int m = 1; m <= 2; ++m)
      for (int n = 0; n <= 3; ++n) {
        worst = std::max(worst, mixed_power_closed_form_residual(c, m, n, true));
        worst = std::max(worst, mixed_power_closed_form_residual(c, m, n, false));
      }
    return worst;
  });
}

// --- section 4.1 / 4.2 (Euclidean spectral) --------------------------------

double eval_u_structure(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3}, idx), seed, id, idx);
  const cplx lambdas[3] = {cplx{0.0, 0.7}, cplx{0.0, -1.3}, cplx{0.0, 2.0}};
  const cplx lam = lambdas[idx % 3];
  return max_over_sheets(chain, [&](int k) {
    const UMatrices u = u_matrices(chain, k, lam);
    const double adj =
        (u.u1.value().dagger() + u.u2.value()).frobenius_norm();
    // lambda = 0 ties U1 to the holomorphic tangent: U1 = 2i dX.
    const UMatrices u0 = u_matrices(chain, k, cplx{0.0, 0.0});
    const CMatrix dx = weierstrass_jet(chain, k).derivative(1, 0);
    const double tie = (u0.u1.value() - (2.0 * kI) * dx).frobenius_norm();
    return std::max(adj, tie);
  });
}

double eval_zero_curvature(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3}, idx), seed, id, idx);
  const cplx lambdas[3] = {cplx{0.0, 0.3}, cplx{0.0, 1.0}, cplx{0.0, 2.0}};
  const cplx lam = lambdas[idx % 3];
  return max_over_sheets(
      chain, [&](int k) { return zero_curvature_residual(chain, k, lam); });
}

double eval_lax(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3}, idx), seed, id, idx);
  const cplx lambdas[4] = {cplx{0.0, 0.5}, cplx{0.0, -0.7}, cplx{0.0, 1.5},
                           cplx{0.0, 3.0}};
  const cplx lam = lambdas[idx % 4];
  return max_over_sheets(chain, [&](int k) {
    const auto r = lax_residuals(chain, k, lam);
    return std::max(r.holomorphic, r.antiholomorphic);
  });
}

double eval_phi_involution(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3}, idx), seed, id, idx);
  const CMatrix I = CMatrix::identity(chain.n);
  return max_over_sheets(chain, [&](int k) {
    // At lambda = 0 the wave function reduces to the reflection I - 2 P_k.
    const CMatrix phi = wavefunction(chain, k, cplx{0.0, 0.0}).value();
    const double reduces =
        (phi - (I - 2.0 * chain.proj(k).value())).frobenius_norm();
    return std::max(reduces, (phi * phi - I).frobenius_norm());
  });
}

double eval_phi_inverse(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3}, idx), seed, id, idx);
  const cplx lambdas[4] = {cplx{0.0, 0.5}, cplx{0.0, -2.0}, cplx{0.0, 0.05},
                           cplx{0.0, 1.0}};
  const cplx lam = lambdas[idx % 4];
  const CMatrix I = CMatrix::identity(chain.n);
  return max_over_sheets(chain, [&](int k) {
    const CMatrix phi = wavefunction(chain, k, lam).value();
    const CMatrix inv = wavefunction_inverse(chain, k, lam).value();
    return std::max((phi * inv - I).frobenius_norm(),
                    (inv * phi - I).frobenius_norm());
  });
}

double eval_phi0_closed(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3}, idx), seed, id, idx);
  Rng rng(seed, id + "/lam", idx);
  const cplx lam{0.0, rng.uniform(-2.0, 2.0)};
  const CMatrix I = CMatrix::identity(chain.n);
  const CMatrix p0 = chain.proj(0).value();
  const CMatrix phi = I - (2.0 / (1.0 - lam)) * p0;
  const CMatrix inv = I - (2.0 / (1.0 + lam)) * p0;
  double worst = (phi * inv - I).frobenius_norm();
  worst = std::max(worst,
                   (wavefunction(chain, 0, lam).value() - phi).frobenius_norm());
  worst = std::max(
      worst, (wavefunction_inverse(chain, 0, lam).value() - inv).frobenius_norm());
  return worst;
}

double eval_st_dual(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3}, idx), seed, id, idx);
  Rng rng(seed, id + "/par", idx);
  const SpectralParams params{cplx{0.0, rng.uniform(-2.5, 2.5)},
                              rng.uniform(0.2, 2.0)};
  return max_over_sheets(chain, [&](int k) {
    const CMatrix a = sym_tafel_surface(chain, k, params);
    const CMatrix b = sym_tafel_via_lambda_derivative(chain, k, params);
    return (a - b).frobenius_norm();
  });
}

double eval_st_coincidence(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3}, idx), seed, id, idx);
  const double taus[4] = {0.3, 0.5, 1.0, 2.0};
  const double tau = taus[idx % 4];
  // lambda^2 = 1 - 2 tau; purely imaginary for tau > 1/2, real otherwise.
  const cplx lam = std::sqrt(cplx{1.0 - 2.0 * tau, 0.0});
  const SpectralParams params{lam, tau};
  return max_over_sheets(chain, [&](int k) {
    const CMatrix xst = sym_tafel_surface(chain, k, params);
    const CMatrix xk = weierstrass_jet(chain, k).value();
    const double coincide = (xst - xk).frobenius_norm();
    const double anti = anti_hermiticity_residual(xst);
    const double tr = std::abs(xst.trace());
    return std::max({coincide, anti, tr});
  });
}

double eval_st_roots(uint64_t seed, uint64_t idx, const std::string& id,
                     StBranch branch) {
  (void)seed;
  const int n = cycle_dim({2, 3, 4}, idx);
  const double taus[4] = {0.3, 0.5, 1.0, 2.0};
  const double tau = taus[(idx / 3) % 4];
  double worst = 0.0;
  for (const cplx& root : st_constraint_roots(branch, n, tau)) {
    worst = std::max(worst, st_scalar_condition_residual(branch, n, tau, root));
  }
  return worst;
}

double eval_phi_top(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(cycle_dim({2, 3, 4}, idx), seed, id, idx);
  Rng rng(seed, id + "/lam", idx);
  const cplx lam{0.0, rng.uniform(-2.0, 2.0)};
  return top_sheet_wavefunction_proportionality(chain, lam);
}

double eval_mixed_scan(uint64_t seed, uint64_t /*idx*/, const std::string& id) {
  Rng rng(seed, id + "/pt", 0);
  const ProjectorChain chain = build_chain(veronese_curve(3), rng.disk(2.0), 3);
  std::vector<double> grid;
  for (double s = -3.0; s <= 3.0 + 1e-12; s += 0.05) grid.push_back(s);
  const auto rows = st_mixed_constraint_scan(chain, 1, 1.0, grid);
  double worst = 0.0;
  for (const auto& row : rows) {
    if (row.pole) continue;
    if (!std::isfinite(row.residual_matrix) || !std::isfinite(row.residual_sextic))
      return 1.0;
    // tau = 1 puts the ST/Weierstrass coincidence at lambda = +- i, where
    // the cubic constraint must be satisfied.
    if (std::abs(std::abs(row.lambda_im) - 1.0) < 1e-9)
      worst = std::max(worst, row.residual_matrix);
  }
  return worst;
}

// --- section 4.3 (Minkowski) ------------------------------------------------

MatrixJet minkowski_theta(uint64_t seed, const std::string& id, uint64_t idx,
                          int order = 3) {
  Rng rng(seed, id + "/theta", idx);
  if (idx % 2 == 0) {
    const TravelingWaveModel model =
        rotating_wave_profile(rng.uniform(0.5, 2.0), rng.uniform(-1.5, 1.5), 0.5);
    return model.theta_at(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), order);
  }
  // Veronese N = 3 middle sheet restricted to the real line.
  const double t0 = rng.uniform(-1.5, 1.5);
  const ProjectorChain chain =
      build_chain(veronese_curve(3), cplx{t0, 0.0}, order);
  const MatrixJet p = restrict_to_real_line(chain.proj(1), rng.uniform(-1.5, 1.5));
  return kI * (p - (1.0 / 3.0) * MatrixJet::identity(3, order));
}

double eval_theta_identity(uint64_t seed, uint64_t idx, const std::string& id,
                           double ThetaIdentityResiduals::*member) {
  const MatrixJet theta = minkowski_theta(seed, id, idx);
  const int n = theta.dim();
  const auto r = theta_identities(theta, n);
  return r.*member;
}

double eval_min_u_su(uint64_t seed, uint64_t idx, const std::string& id) {
  Rng rng(seed, id + "/m", idx);
  const TravelingWaveModel model =
      rotating_wave_profile(rng.uniform(0.5, 2.0), rng.uniform(-1.5, 1.5),
                            rng.uniform(-0.8, 0.8));
  const MatrixJet theta =
      model.theta_at(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), 1);
  const CMatrix a = commutator(theta.derivative(1, 0), theta.value());
  const double lam = model.lambda;
  const CMatrix u1 = (-2.0 / (1.0 + lam)) * a;
  const CMatrix u2 = (-2.0 * model.kappa / (1.0 - lam)) * a;
  return std::max(
      {anti_hermiticity_residual(u1), std::abs(u1.trace()),
       anti_hermiticity_residual(u2), std::abs(u2.trace())});
}

double eval_min_el(uint64_t seed, uint64_t idx, const std::string& id) {
  Rng rng(seed, id + "/m", idx);
  const TravelingWaveModel model =
      rotating_wave_profile(rng.uniform(0.5, 2.0), rng.uniform(-1.5, 1.5), 0.5);
  const MatrixJet theta =
      model.theta_at(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), 2);
  double worst = minkowski_el_residual(theta);
  // The traveling-wave constraint d- theta = kappa d+ theta is exact.
  const CMatrix chain_rule =
      theta.derivative(0, 1) - model.kappa * theta.derivative(1, 0);
  return std::max(worst, chain_rule.frobenius_norm());
}

double eval_min_tangents(uint64_t seed, uint64_t idx, const std::string& id) {
  Rng rng(seed, id + "/m", idx);
  const double kappas[3] = {0.0, -0.6, 1.2};
  const TravelingWaveModel model =
      rotating_wave_profile(rng.uniform(0.5, 2.0), kappas[idx % 3], 0.5);
  const double xp = rng.uniform(-2.0, 2.0);
  const double xm = rng.uniform(-2.0, 2.0);
  const auto t = minkowski_weierstrass_tangents(model, xp, xm);
  double worst = (t.t_minus + model.kappa * t.t_plus).frobenius_norm();
  worst = std::max(worst, anti_hermiticity_residual(t.t_plus));
  worst = std::max(worst, std::abs(t.t_plus.trace()));
  if (model.kappa == 0.0)
    worst = std::max(worst, t.t_minus.frobenius_norm());
  return worst;
}

double eval_min_lax(uint64_t seed, uint64_t idx, const std::string& id) {
  Rng rng(seed, id + "/m", idx);
  const double lams[4] = {0.5, -0.5, 2.0, 0.0};
  const TravelingWaveModel model = rotating_wave_profile(
      rng.uniform(0.5, 2.0), rng.uniform(-1.5, 1.5), lams[idx % 4]);
  const auto r = traveling_lax_residuals(model, rng.uniform(-2.0, 2.0),
                                         rng.uniform(-2.0, 2.0));
  return std::max(r.plus, r.minus);
}

double eval_min_involution(uint64_t seed, uint64_t idx, const std::string& id) {
  const MatrixJet theta = minkowski_theta(seed, id, idx, 1);
  const int n = theta.dim();
  const CMatrix id_m = CMatrix::identity(n);
  const CMatrix b = (1.0 - 2.0 / n) * id_m + (2.0 * kI) * theta.value();
  return (b * b - id_m).frobenius_norm();
}

double eval_conjugated(uint64_t seed, uint64_t idx, const std::string& id) {
  Rng rng(seed, id + "/m", idx);
  const double lams[3] = {0.5, -0.3, 2.0};
  const TravelingWaveModel model = rotating_wave_profile(
      rng.uniform(0.5, 2.0), rng.uniform(-1.5, 1.5), lams[idx % 3]);
  const auto g = conjugated_generator(model, rng.uniform(-1.5, 1.5),
                                      rng.uniform(-1.5, 1.5));
  return std::max({g.residual_conjugation, g.residual_product_path,
                   g.norm_preservation});
}

double eval_fg_su(uint64_t seed, uint64_t idx, const std::string& id) {
  Rng rng(seed, id + "/m", idx);
  const double lams[4] = {0.5, -0.5, 2.0, 0.0};
  TravelingWaveModel model = rotating_wave_profile(
      rng.uniform(0.5, 2.0), rng.uniform(-1.5, 1.5), lams[idx % 4]);
  model.c1 = rng.uniform(0.5, 2.0);
  model.c2 = rng.uniform(-1.0, 1.0);
  model.c3 = rng.uniform(-1.0, 1.0);
  const auto s = fg_surface_and_tangents(model, rng.uniform(-1.5, 1.5),
                                         rng.uniform(-1.5, 1.5));
  return std::max(anti_hermiticity_residual(s.x), std::abs(s.x.trace()));
}

double eval_fg_ratio(uint64_t seed, uint64_t idx, const std::string& id) {
  Rng rng(seed, id + "/m", idx);
  const double lams[3] = {0.5, -0.5, 2.0};
  TravelingWaveModel model = rotating_wave_profile(
      rng.uniform(0.5, 2.0), rng.uniform(-1.5, 1.5), lams[idx % 3]);
  model.c1 = rng.uniform(0.5, 2.0);
  const double xp = rng.uniform(-1.5, 1.5);
  const double xm = rng.uniform(-1.5, 1.5);
  const auto s = fg_surface_and_tangents(model, xp, xm);
  const double lam = model.lambda;
  const double ratio =
      (1.0 + lam) * (1.0 + model.kappa * lam / (1.0 - lam));
  double worst =
      (s.t_minus_formula - ratio * s.t_plus_formula).frobenius_norm();
  // c1 = 0 kills both tangents.
  TravelingWaveModel flat = model;
  flat.c1 = 0.0;
  const auto s0 = fg_surface_and_tangents(flat, xp, xm);
  worst = std::max(worst, s0.t_plus_formula.frobenius_norm());
  worst = std::max(worst, s0.t_minus_formula.frobenius_norm());
  return worst;
}

double eval_fg_fd(uint64_t seed, uint64_t idx, const std::string& id) {
  Rng rng(seed, id + "/m", idx);
  const double lams[3] = {0.5, -0.5, 2.0};
  TravelingWaveModel model = rotating_wave_profile(
      rng.uniform(0.5, 2.0), rng.uniform(-1.0, 1.0), lams[idx % 3]);
  model.c1 = rng.uniform(0.5, 2.0);
  model.c2 = rng.uniform(-1.0, 1.0);
  model.c3 = rng.uniform(-1.0, 1.0);
  const double xp = rng.uniform(-1.0, 1.0);
  const double xm = rng.uniform(-1.0, 1.0);
  const double h = 1e-4;
  const auto s = fg_surface_and_tangents(model, xp, xm);
  const CMatrix fd_p =
      (1.0 / (2.0 * h)) * (fg_surface_and_tangents(model, xp + h, xm).x -
                           fg_surface_and_tangents(model, xp - h, xm).x);
  const CMatrix fd_m =
      (1.0 / (2.0 * h)) * (fg_surface_and_tangents(model, xp, xm + h).x -
                           fg_surface_and_tangents(model, xp, xm - h).x);
  return std::max((fd_p - s.t_plus_derivative).frobenius_norm(),
                  (fd_m - s.t_minus_derivative).frobenius_norm());
}

double eval_kappa_scan(uint64_t seed, uint64_t idx, const std::string& id) {
  Rng rng(seed, id + "/m", idx);
  const double lams[5] = {0.0, 0.5, -0.5, 2.0, -2.0};
  const double lam = lams[idx % 5];
  const double ks = kappa_star(lam);
  double worst = tangent_ratio_residual(ks, lam);

  // 0.01-grid scan around kappa*: the residual minimum must land on the
  // closest grid point and the curve must grow away from it.
  std::vector<double> grid;
  for (int i = -50; i <= 50; ++i) grid.push_back(ks + 0.01 * i);
  const auto rows =
      kappa_coincidence_scan(rng.uniform(0.5, 2.0), lam, grid,
                             rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  size_t best = 0;
  for (size_t i = 1; i < rows.size(); ++i)
    if (rows[i].ratio_residual < rows[best].ratio_residual) best = i;
  if (std::abs(rows[best].kappa - ks) > 0.005) return 1.0;
  worst = std::max(worst, rows[best].direction_residual);
  // Strictly positive residual away from the root.
  if (rows.front().ratio_residual < 1e-6 || rows.back().ratio_residual < 1e-6)
    return 1.0;
  return worst;
}

// --- negative controls ------------------------------------------------------

double eval_neg_nonholo_el(uint64_t seed, uint64_t idx, const std::string& id) {
  Rng rng(seed, id + "/pt", idx);
  const cplx xi = rng.disk(1.5);
  const VectorJet f0 = contaminated_seed(2 + idx % 2, xi, 4);
  const ProjectorChain chain = build_chain_from_seed(f0, xi, 3, 1);
  return el_residual(chain, 0);
}

double eval_neg_nonholo_zc(uint64_t seed, uint64_t idx, const std::string& id) {
  Rng rng(seed, id + "/pt", idx);
  const cplx xi = rng.disk(1.5);
  const VectorJet f0 = contaminated_seed(2, xi, 4);
  const ProjectorChain chain = build_chain_from_seed(f0, xi, 3, 1);
  return zero_curvature_residual(chain, 0, cplx{0.0, 0.7});
}

double eval_neg_perturbed(uint64_t seed, uint64_t idx, const std::string& id) {
  ProjectorChain chain = sample_chain(3, seed, id, idx);
  Rng rng(seed, id + "/noise", idx);
  const CMatrix g = rng.gaussian_matrix(3);
  const CMatrix h = 0.5 * (g + g.dagger());
  // Hermitian perturbation of the order-0 coefficient of P_0.
  MatrixJet& p = chain.p[0];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) p.at(i, j).coeff(0, 0) += 1e-2 * h(i, j);
  const CMatrix pv = p.value();
  const double idem = (pv * pv - pv).frobenius_norm();
  return std::max(idem, el_residual(chain, 0));
}

double eval_neg_rank_deficient(uint64_t seed, uint64_t idx, const std::string& id) {
  Rng rng(seed, id + "/pt", idx);
  HolomorphicCurve curve;
  curve.n = 3;
  curve.coeffs = {{cplx{1.0, 0.0}},
                  {cplx{0.0, 0.0}, cplx{1.0, 0.0}},
                  {cplx{0.0, 0.0}, cplx{2.0, 0.0}}};
  try {
    (void)build_chain(curve, rng.disk(1.5), 3);
  } catch (const Error&) {
    return 1.0;  // construction refused, control fired
  }
  return 0.0;
}

double eval_neg_st_complex_lambda(uint64_t seed, uint64_t idx, const std::string& id) {
  const ProjectorChain chain = sample_chain(2 + idx % 2, seed, id, idx);
  // Anti-Hermiticity survives real or purely imaginary lambda (1 - lambda^2
  // stays real); it breaks only off both axes.
  const SpectralParams params{cplx{0.5, 0.5}, 1.0};
  return max_over_sheets(chain, [&](int k) {
    return anti_hermiticity_residual(sym_tafel_surface(chain, k, params));
  });
}

// --- registry assembly ------------------------------------------------------

struct CaseSpec {
  const char* id;
  const char* anchor;
  double tol;
  bool negative;
  int forced;
  std::function<double(uint64_t, uint64_t, const std::string&)> fn;
};

std::vector<IdentityCase> build_registry() {
  using namespace std::placeholders;
  std::vector<CaseSpec> specs;
  auto add = [&](const char* id, const char* anchor, double tol,
                 std::function<double(uint64_t, uint64_t, const std::string&)> fn,
                 bool negative = false, int forced = 0) {
    specs.push_back({id, anchor, tol, negative, forced, std::move(fn)});
  };

  add("P2.1.axioms", "Eq. (2.1)", 1e-10,
      [](uint64_t s, uint64_t i, const std::string& id) {
        return eval_axioms(s, i, id, {2, 3, 4});
      });
  add("P2.2.scale", "Eq. (2.2)", 1e-10, eval_scale_invariance);
  add("P2.3.recurrence", "Eq. (2.3)", 1e-10, eval_recurrence);
  add("P2.5.el", "Eq. (2.5)", 1e-9, eval_el);
  add("P2.5.lagrangian", "Eq. (2.5)", 1e-10, eval_lagrangian);
  add("P2.6.conservation", "Eq. (2.6)", 1e-9, eval_conservation);
  add("P2.9.su", "Eq. (2.9)", 1e-10, eval_surface_su);
  add("P2.roundtrip", "Eq. (2.11)", 1e-10, eval_roundtrip);
  add("P2.14.tangents", "Eqs. (2.13)-(2.14)", 1e-10, eval_tangents);
  add("P2.15.comm", "Eq. (2.15)", 1e-10, eval_comm_identity);
  add("P2.2.i.involution", "sec. 2.2(i)", 1e-10, eval_involution);
  add("P2.2.i.spectrum", "sec. 2.2(i)", 1e-8, eval_projector_spectrum);
  add("P2.2.ii.anticom", "Eq. (2.16)", 1e-10, eval_anticom);
  add("P2.2.ii.sandwich", "Eq. (2.17)", 1e-10, eval_sandwich);
  add("P2.2.ii.exchange", "Eqs. (2.18)-(2.19)", 1e-10, eval_exchange);
  add("P2.2.iii.partial-sums", "Eqs. (2.20)-(2.25)", 1e-10, eval_partial_sums);
  add("P2.2.iv.traces", "Eqs. (2.26)-(2.31)", 1e-10, eval_deriv_traces);
  add("P2.2.iv.schwarz", "sec. 2.2(iv)", 1e-12, eval_schwarz);
  add("P2.2.v.compression", "sec. 2.2(v)", 1e-10, eval_compression);
  add("P2.2.vi.even-collapse", "Eq. (2.32)", 1e-10, eval_even_collapse);
  add("P2.2.vi.odd-identical", "Eq. (2.33)", 1e-10, eval_odd_identical);
  add("P2.2.vii.zero-products", "Eqs. (2.34)-(2.37)", 1e-10, eval_zero_products);
  add("P2.2.vii.exception-generic", "Eq. (2.36) exception", 0.5,
      eval_exception_generic, false, 1);
  add("P2.2.viii.odd-trace", "Eq. (2.38)", 1e-10, eval_odd_trace);
  add("P2.2.viii.factorization", "Eq. (2.39)", 1e-10, eval_factorization);

  add("P3.1.linear-dependence", "Eq. (3.1)", 1e-10, eval_linear_dependence);
  add("P3.1.minimal-poly", "Eqs. (3.2)-(3.4)", 1e-9, eval_minimal_poly);
  add("P3.1.spectrum", "Property 1 eigenvalues", 1e-8, eval_spectrum_containment);
  add("P3.2.surface-el", "Property 2", 1e-9, eval_surface_el);
  add("P3.2.mixed-second", "Property 2 proof", 1e-10, eval_mixed_second);
  add("P3.3.killing", "Eqs. (3.3)-(3.4) Killing", 1e-10, eval_killing);
  add("P3.4.pkxk", "Eq. (3.7)", 1e-10, eval_pkxk);
  add("P3.4.products-vanish", "Eq. (3.5)", 1e-9, eval_x_products_vanish);
  add("P3.4.dxdx-generic", "Eqs. (3.8)-(3.9)", 1e-9, eval_dxdx_generic, false, 1);
  add("P3.5.traces-vanish", "Eqs. (3.10)-(3.16)", 1e-9, eval_x_traces_vanish);
  add("P3.6.second-traces", "Property 6", 1e-9, eval_second_traces);
  add("P3.7.mixed-traces", "Eq. (3.19)", 1e-9, eval_p7_traces);
  add("P3.8.tangent", "Eq. (3.26)", 1e-10, eval_tangent_self);
  add("P3.9.shift", "Eq. (3.27)", 1e-9, eval_x_shift);
  add("P3.10.mixed-trace-parity", "Eq. (3.28)", 1e-9, eval_mixed_trace_parity);
  add("P3.11.traces", "Eqs. (3.29)-(3.30)", 1e-9, eval_p11_traces);
  add("P3.12.identical-closed", "Eqs. (3.31)-(3.32)", 1e-9, eval_p12_identical);
  add("P3.12.mixed-closed", "Eqs. (3.33)-(3.34)", 1e-9, eval_p12_mixed);

  add("P4.8.u-structure", "Eq. (4.8)", 1e-10, eval_u_structure);
  add("P4.9.zero-curvature", "Eq. (4.9)", 1e-8, eval_zero_curvature);
  add("P4.10.lax", "Eqs. (4.10)-(4.11)", 1e-8, eval_lax);
  add("P4.10.involution", "Eq. (4.10) at lambda = 0", 1e-10, eval_phi_involution);
  add("P4.12.inverse", "Eq. (4.12)", 1e-10, eval_phi_inverse);
  add("P4.14.st-dual", "Eqs. (4.13)-(4.14)", 1e-9, eval_st_dual);
  add("P4.15.st-coincidence", "Eq. (4.15)", 1e-10, eval_st_coincidence);
  add("P4.16.phi0", "Eq. (4.16)", 1e-10, eval_phi0_closed);
  add("P4.19.holo-roots", "Eqs. (4.17)-(4.19)", 1e-9,
      [](uint64_t s, uint64_t i, const std::string& id) {
        return eval_st_roots(s, i, id, StBranch::holomorphic);
      });
  add("P4.21.antiholo-roots", "Eqs. (4.20)-(4.21)", 1e-9,
      [](uint64_t s, uint64_t i, const std::string& id) {
        return eval_st_roots(s, i, id, StBranch::antiholomorphic);
      });
  add("P4.21.phi-top", "Eq. (4.21) wave function", 1e-10, eval_phi_top);
  add("P4.22.mixed-scan", "Eq. (4.22) scan", 1e-9, eval_mixed_scan, false, 1);

  add("M4.26.u-su", "Eqs. (4.26)-(4.27)", 1e-10, eval_min_u_su);
  add("M4.28.el", "Eq. (4.28)", 1e-10, eval_min_el);
  add("M4.29.tangents", "Eq. (4.29)", 1e-10, eval_min_tangents);
  add("M4.30.theta-sq", "Eq. (4.30)", 1e-10,
      [](uint64_t s, uint64_t i, const std::string& id) {
        return eval_theta_identity(s, i, id, &ThetaIdentityResiduals::theta_sq);
      });
  add("M4.31.anticom", "Eq. (4.31)", 1e-10,
      [](uint64_t s, uint64_t i, const std::string& id) {
        return eval_theta_identity(s, i, id, &ThetaIdentityResiduals::anticom);
      });
  add("M4.32.sandwich", "Eq. (4.32)", 1e-10,
      [](uint64_t s, uint64_t i, const std::string& id) {
        return eval_theta_identity(s, i, id, &ThetaIdentityResiduals::sandwich);
      });
  add("M4.33.bracket-contraction", "Eq. (4.33)", 1e-10,
      [](uint64_t s, uint64_t i, const std::string& id) {
        return eval_theta_identity(s, i, id,
                                   &ThetaIdentityResiduals::bracket_left);
      });
  add("M4.34.bracket-expansion", "Eq. (4.34)", 1e-10,
      [](uint64_t s, uint64_t i, const std::string& id) {
        return eval_theta_identity(s, i, id,
                                   &ThetaIdentityResiduals::bracket_right);
      });
  add("M4.35.bracket-anticom", "Eq. (4.35)", 1e-10,
      [](uint64_t s, uint64_t i, const std::string& id) {
        return eval_theta_identity(s, i, id,
                                   &ThetaIdentityResiduals::bracket_anticom);
      });
  add("M4.36.phi-lax", "Eq. (4.36)", 1e-8, eval_min_lax);
  add("M4.36.involution", "Eq. (4.36) factor", 1e-10, eval_min_involution);
  add("M4.38.fg-su", "Eqs. (4.37)-(4.38)", 1e-10, eval_fg_su);
  add("M4.39.fg-tangent-ratio", "Eq. (4.39)", 1e-10, eval_fg_ratio);
  add("M4.39.fg-fd", "Eq. (4.39) vs finite differences", 1e-6, eval_fg_fd);
  add("M4.43.two-path", "Eq. (4.43)", 1e-9, eval_conjugated);
  add("M4.kappa.scan", "kappa-star constraint", 1e-10, eval_kappa_scan);

  add("NEG.nonholo-el", "Eq. (2.5) control", 1e-3, eval_neg_nonholo_el, true);
  add("NEG.nonholo-zc", "Eq. (4.9) control", 1e-3, eval_neg_nonholo_zc, true);
  add("NEG.perturbed-projector", "Eq. (2.1) control", 1e-3, eval_neg_perturbed,
      true);
  add("NEG.rank-deficient", "Eq. (2.3) control", 1e-3, eval_neg_rank_deficient,
      true);
  add("NEG.st-complex-lambda", "Eq. (4.15) control", 1e-3,
      eval_neg_st_complex_lambda, true);

  std::vector<IdentityCase> cases;
  cases.reserve(specs.size());
  for (auto& s : specs) {
    IdentityCase c;
    c.id = s.id;
    c.paper_anchor = s.anchor;
    c.tolerance = s.tol;
    c.negative_control = s.negative;
    c.forced_samples = s.forced;
    const std::string id_copy = c.id;
    auto fn = s.fn;
    c.eval = [fn, id_copy](uint64_t seed, uint64_t index) {
      return fn(seed, index, id_copy);
    };
    cases.push_back(std::move(c));
  }
  std::sort(cases.begin(), cases.end(),
            [](const IdentityCase& a, const IdentityCase& b) { return a.id < b.id; });
  return cases;
}

}  // namespace

const std::vector<IdentityCase>& registry() {
  static const std::vector<IdentityCase> reg = build_registry();
  return reg;
}

std::vector<CoverageEntry> registry_coverage() {
  std::map<std::string, std::vector<std::string>> table;
  for (const auto& c : registry()) table[c.paper_anchor].push_back(c.id);
  std::vector<CoverageEntry> out;
  out.reserve(table.size());
  for (auto& [anchor, ids] : table) out.push_back({anchor, ids});
  return out;
}

}  // namespace cpn
