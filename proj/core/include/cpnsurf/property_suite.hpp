#pragma once

#include "cpnsurf/minkowski.hpp"
#include "cpnsurf/rng.hpp"
#include "cpnsurf/spectral.hpp"
#include "cpnsurf/words.hpp"

#include <cstdint>
#include <functional>

namespace cpn {

enum class Space { euclidean, minkowski };

/// Which models a case draws its samples from.
struct ModelSelector {
  Space space = Space::euclidean;
  std::vector<int> dims{2, 3, 4};  // cycled through by sample index
  bool mixed_sheet_only = false;   // restrict to 1 <= k <= N-2 (needs N >= 3)
};

/// One registered identity: an id, the anchor it verifies, a sampler and a
/// residual evaluator. Negative controls pass when their residual EXCEEDS
/// the threshold.
struct IdentityCase {
  std::string id;
  std::string paper_anchor;
  ModelSelector model;
  double tolerance = 1e-9;
  bool negative_control = false;
  int forced_samples = 0;  // 0: use the suite options
  std::function<double(uint64_t seed, uint64_t sample_index)> eval;
};

struct IdentityReport {
  std::string id;
  int samples = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool negative_control = false;
  bool pass = false;
  uint64_t seed = 0;
};

struct SuiteOptions {
  uint64_t seed = 42;
  int samples_per_case = 20;
  std::string filter;      // id prefix; empty selects everything
  double tol_scale = 1.0;  // multiplies every (non-control) tolerance
  int threads = 0;         // 0: CPNSURF_THREADS, then hardware
};

/// The full case registry, sorted by id, built once.
const std::vector<IdentityCase>& registry();

/// Runs every selected case on >= samples_per_case admissible points.
/// Deterministic given (seed, filter): sampling is counter-based per
/// (seed, case id, sample index), so cases can run in any order or
/// concurrently with identical results.
std::vector<IdentityReport> run_suite(const SuiteOptions& opts);

struct CoverageEntry {
  std::string anchor;
  std::vector<std::string> case_ids;
};
/// Anchor -> case-id table over the whole registry.
std::vector<CoverageEntry> registry_coverage();

/// Deterministic JSON rendering (fixed field order, %.17g doubles).
std::string reports_to_json(const std::vector<IdentityReport>& reports);

/// True when every non-control case passes and every control fires.
bool all_passed(const std::vector<IdentityReport>& reports);

/// Resolves the worker count: explicit request, then CPNSURF_THREADS, then
/// hardware concurrency.
int thread_cap(int requested);

}  // namespace cpn
