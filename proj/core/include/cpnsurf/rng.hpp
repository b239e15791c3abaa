#pragma once

#include "cpnsurf/linalg.hpp"

#include <cstdint>
#include <string_view>

namespace cpn {

/// Counter-based deterministic generator keyed by (seed, stream label,
/// sample index). Any case can be evaluated in any order, or in parallel,
/// with identical results.
class Rng {
 public:
  Rng(uint64_t seed, std::string_view stream, uint64_t index = 0);

  uint64_t next_u64();
  /// Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi);
  /// Standard normal via Box-Muller.
  double gaussian();
  cplx gaussian_cplx();
  /// Uniform over the disk |z| <= radius (polar map, no rejection).
  cplx disk(double radius);
  /// Random matrix with independent standard complex Gaussian entries.
  CMatrix gaussian_matrix(int n);
  /// Random su(n) element (anti-Hermitian, traceless).
  CMatrix su_element(int n);

 private:
  uint64_t state_;
  uint64_t counter_ = 0;
};

/// Fixed probe points prepended to every Euclidean sampling stream.
std::vector<cplx> fixed_probe_points();

}  // namespace cpn
