#pragma once

#include "cpnsurf/surfaces.hpp"

#include <string>

namespace cpn {

/// Letters of matrix words built from one sheet of a chain. P-letters act
/// on the projector, X-letters on the Weierstrass immersion.
enum class Letter { P, DP, BP, X, DX, BX };

using Word = std::vector<Letter>;

std::string word_to_string(const Word& w);

/// Point data for one sheet, enough to evaluate any word.
struct WordContext {
  int n = 0;
  int k = 0;
  double c = 0.0;  // level constant
  CMatrix p, dp, bp;
  CMatrix x, dx, bx;

  static WordContext from_chain(const ProjectorChain& chain, int k);
};

/// Multiplies the letters out left to right. Throws on an empty word or an
/// unknown letter (malformed descriptor).
CMatrix eval_word(const WordContext& ctx, const Word& w);

struct WordCounts {
  int deriv = 0;      // total derivative letters
  int holo = 0;       // M: d-type letters
  int anti = 0;       // Mbar: dbar-type letters
  int plain = 0;      // P or X letters
  bool mixed_type() const { return holo > 0 && anti > 0; }
};
WordCounts count_letters(const Word& w);

/// Collapses runs of the plain letter (P or X) to a single occurrence.
/// Membership in the nonzero exception set {D D, D P D} for
/// identical-derivative projector words is decided on this reduced form.
Word collapse_plain_runs(const Word& w);

/// True when an identical-derivative word over {P, dP} (or {P, dbarP}) is
/// one of the generically nonzero exceptions dP.dP or dP.P.dP.
bool is_identical_word_exception(const Word& w);

// --- Residuals for the identity classes ------------------------------------

/// Even derivative count: || P w - w P ||. Odd: || P w - w (I - P) ||.
/// w must use derivative letters only.
double projector_exchange_residual(const WordContext& ctx, const Word& w);

/// Even derivative-only words: || w P - tr(w P) P ||.
double even_word_collapse_residual(const WordContext& ctx, const Word& w);

/// Even derivative-only words and any square A:
/// | tr(A w P) - tr(A P) tr(w P) |.
double trace_factorization_residual(const WordContext& ctx, const Word& w,
                                    const CMatrix& a);

/// Odd total derivative count, any number of P letters: | tr(w) |.
double odd_trace_residual(const WordContext& ctx, const Word& w);

/// Identical-derivative projector words with >= 2 derivative letters:
/// || w || unless the word is an exception (caller checks separately).
double identical_zero_residual(const WordContext& ctx, const Word& w);

/// X-shift identity: || X w - w (X + i(M - Mbar) I) || for derivative-only
/// X-words.
double x_shift_residual(const WordContext& ctx, const Word& w);

/// | tr(w) | for X-words (used for the vanishing-trace classes).
double x_trace_residual(const WordContext& ctx, const Word& w);

/// Closed forms for (dX dbarX)^m X^n and (dbarX dX)^m X^n with
/// alpha = i(c-1), beta = i c, gamma = i(c-2). Returns the residual against
/// the stated right-hand side.
double mixed_power_closed_form_residual(const WordContext& ctx, int m, int n,
                                        bool holo_first);

/// (dX)^2 X^n = i^n (c-2)^n (dX)^2 (and the dbar mirror with c^n).
double identical_power_closed_form_residual(const WordContext& ctx, int n,
                                            bool holo);

}  // namespace cpn
