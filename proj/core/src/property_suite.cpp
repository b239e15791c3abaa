#include "cpnsurf/property_suite.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <thread>

namespace cpn {

int thread_cap(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("CPNSURF_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<IdentityReport> run_suite(const SuiteOptions& opts) {
  const auto& reg = registry();
  std::vector<const IdentityCase*> selected;
  for (const auto& c : reg) {
    if (c.id.rfind(opts.filter, 0) == 0) selected.push_back(&c);
  }
  if (selected.empty()) {
    std::fprintf(stderr, "warning: filter '%s' matches no registered case\n",
                 opts.filter.c_str());
    return {};
  }

  std::vector<IdentityReport> reports(selected.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= selected.size()) return;
      const IdentityCase& c = *selected[i];
      const int samples =
          c.forced_samples > 0 ? c.forced_samples : opts.samples_per_case;
      IdentityReport r;
      r.id = c.id;
      r.samples = samples;
      r.seed = opts.seed;
      r.negative_control = c.negative_control;
      r.tolerance = c.negative_control ? c.tolerance : c.tolerance * opts.tol_scale;
      double max_res = 0.0;
      for (int s = 0; s < samples; ++s) {
        double res;
        try {
          res = c.eval(opts.seed, static_cast<uint64_t>(s));
        } catch (const std::exception&) {
          // A throwing case counts as a unit residual: failure for normal
          // cases, a fired control for negative ones.
          res = 1.0;
        }
        max_res = std::max(max_res, res);
      }
      r.max_residual = max_res;
      r.pass = c.negative_control ? (max_res > r.tolerance)
                                  : (max_res <= r.tolerance);
      reports[i] = r;
    }
  };

  const int nthreads =
      std::min<int>(thread_cap(opts.threads), static_cast<int>(selected.size()));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::sort(reports.begin(), reports.end(),
            [](const IdentityReport& a, const IdentityReport& b) {
              return a.id < b.id;
            });
  return reports;
}

std::string reports_to_json(const std::vector<IdentityReport>& reports) {
  std::string out = "[\n";
  char buf[512];
  for (size_t i = 0; i < reports.size(); ++i) {
    const IdentityReport& r = reports[i];
    std::snprintf(buf, sizeof buf,
                  "  {\"id\": \"%s\", \"samples\": %d, \"max_residual\": %.17g, "
                  "\"tolerance\": %.17g, \"negative_control\": %s, "
                  "\"pass\": %s, \"seed\": %llu}%s\n",
                  r.id.c_str(), r.samples, r.max_residual, r.tolerance,
                  r.negative_control ? "true" : "false",
                  r.pass ? "true" : "false",
                  static_cast<unsigned long long>(r.seed),
                  i + 1 < reports.size() ? "," : "");
    out += buf;
  }
  out += "]\n";
  return out;
}

bool all_passed(const std::vector<IdentityReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

}  // namespace cpn
