#include "cpnsurf/words.hpp"

#include <cmath>

namespace cpn {

std::string word_to_string(const Word& w) {
  std::string s;
  for (Letter l : w) {
    switch (l) {
      case Letter::P: s += "P "; break;
      case Letter::DP: s += "dP "; break;
      case Letter::BP: s += "bP "; break;
      case Letter::X: s += "X "; break;
      case Letter::DX: s += "dX "; break;
      case Letter::BX: s += "bX "; break;
    }
  }
  if (!s.empty()) s.pop_back();
  return s;
}

WordContext WordContext::from_chain(const ProjectorChain& chain, int k) {
  WordContext ctx;
  ctx.n = chain.n;
  ctx.k = k;
  ctx.c = chain.c.at(k);
  const MatrixJet& p = chain.proj(k);
  ctx.p = p.value();
  ctx.dp = p.derivative(1, 0);
  ctx.bp = p.derivative(0, 1);
  const MatrixJet x = weierstrass_jet(chain, k);
  ctx.x = x.value();
  ctx.dx = x.derivative(1, 0);
  ctx.bx = x.derivative(0, 1);
  return ctx;
}

CMatrix eval_word(const WordContext& ctx, const Word& w) {
  if (w.empty()) throw Error("eval_word: malformed word descriptor (empty)");
  CMatrix acc = CMatrix::identity(ctx.n);
  for (Letter l : w) {
    switch (l) {
      case Letter::P: acc = acc * ctx.p; break;
      case Letter::DP: acc = acc * ctx.dp; break;
      case Letter::BP: acc = acc * ctx.bp; break;
      case Letter::X: acc = acc * ctx.x; break;
      case Letter::DX: acc = acc * ctx.dx; break;
      case Letter::BX: acc = acc * ctx.bx; break;
      default: throw Error("eval_word: malformed word descriptor");
    }
  }
  return acc;
}

WordCounts count_letters(const Word& w) {
  WordCounts c;
  for (Letter l : w) {
    switch (l) {
      case Letter::DP:
      case Letter::DX:
        ++c.deriv;
        ++c.holo;
        break;
      case Letter::BP:
      case Letter::BX:
        ++c.deriv;
        ++c.anti;
        break;
      default:
        ++c.plain;
        break;
    }
  }
  return c;
}

Word collapse_plain_runs(const Word& w) {
  Word r;
  for (Letter l : w) {
    const bool plain = (l == Letter::P || l == Letter::X);
    if (plain && !r.empty() && r.back() == l) continue;
    r.push_back(l);
  }
  return r;
}

bool is_identical_word_exception(const Word& w) {
  const Word r = collapse_plain_runs(w);
  if (r.size() == 2) {
    return (r[0] == Letter::DP && r[1] == Letter::DP) ||
           (r[0] == Letter::BP && r[1] == Letter::BP);
  }
  if (r.size() == 3 && r[1] == Letter::P) {
    return (r[0] == Letter::DP && r[2] == Letter::DP) ||
           (r[0] == Letter::BP && r[2] == Letter::BP);
  }
  return false;
}

double projector_exchange_residual(const WordContext& ctx, const Word& w) {
  const WordCounts counts = count_letters(w);
  if (counts.plain != 0)
    throw Error("projector_exchange_residual: word must be derivative-only");
  const CMatrix wv = eval_word(ctx, w);
  const CMatrix lhs = ctx.p * wv;
  if (counts.deriv % 2 == 0) return (lhs - wv * ctx.p).frobenius_norm();
  return (lhs - wv * (CMatrix::identity(ctx.n) - ctx.p)).frobenius_norm();
}

double even_word_collapse_residual(const WordContext& ctx, const Word& w) {
  const CMatrix wp = eval_word(ctx, w) * ctx.p;
  return (wp - wp.trace() * ctx.p).frobenius_norm();
}

double trace_factorization_residual(const WordContext& ctx, const Word& w,
                                    const CMatrix& a) {
  const CMatrix wp = eval_word(ctx, w) * ctx.p;
  const cplx lhs = (a * wp).trace();
  const cplx rhs = (a * ctx.p).trace() * wp.trace();
  return std::abs(lhs - rhs);
}

double odd_trace_residual(const WordContext& ctx, const Word& w) {
  return std::abs(eval_word(ctx, w).trace());
}

double identical_zero_residual(const WordContext& ctx, const Word& w) {
  return eval_word(ctx, w).frobenius_norm();
}

double x_shift_residual(const WordContext& ctx, const Word& w) {
  const WordCounts counts = count_letters(w);
  const CMatrix wv = eval_word(ctx, w);
  const CMatrix shift =
      ctx.x + (kI * static_cast<double>(counts.holo - counts.anti)) *
                  CMatrix::identity(ctx.n);
  return (ctx.x * wv - wv * shift).frobenius_norm();
}

double x_trace_residual(const WordContext& ctx, const Word& w) {
  return std::abs(eval_word(ctx, w).trace());
}

double mixed_power_closed_form_residual(const WordContext& ctx, int m, int n,
                                        bool holo_first) {
  const cplx alpha = kI * (ctx.c - 1.0);
  const cplx beta = kI * ctx.c;
  const cplx gamma = kI * (ctx.c - 2.0);
  const CMatrix pair =
      holo_first ? ctx.dx * ctx.bx : ctx.bx * ctx.dx;
  CMatrix w = CMatrix::identity(ctx.n);
  for (int i = 0; i < m; ++i) w = w * pair;
  CMatrix lhs = w;
  for (int i = 0; i < n; ++i) lhs = lhs * ctx.x;
  // Leading eigen-constant: beta for dX bX words, gamma for bX dX words.
  const cplx lead = holo_first ? beta : gamma;
  const cplx diff = std::pow(alpha, n) - std::pow(lead, n);
  const CMatrix rhs = diff * (w * ctx.x * ctx.x - (2.0 * alpha) * (w * ctx.x)) +
                      (std::pow(lead, n) + kI * ctx.c * gamma * diff) * w;
  return (lhs - rhs).frobenius_norm();
}

double identical_power_closed_form_residual(const WordContext& ctx, int n,
                                            bool holo) {
  const CMatrix d = holo ? ctx.dx : ctx.bx;
  const cplx factor = holo ? kI * (ctx.c - 2.0) : kI * ctx.c;
  CMatrix lhs = d * d;
  for (int i = 0; i < n; ++i) lhs = lhs * ctx.x;
  const CMatrix rhs = std::pow(factor, n) * (d * d);
  return (lhs - rhs).frobenius_norm();
}

}  // namespace cpn
