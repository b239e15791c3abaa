// cpnsurf: verify the identity suite, export surface grids, run parameter
// scans. Configuration comes from a JSON document plus flag overrides.

#include "cpnsurf/exports.hpp"
#include "cpnsurf/minkowski.hpp"
#include "cpnsurf/property_suite.hpp"
#include "cpnsurf/spectral.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

namespace {

struct CommonFlags {
  std::string config_path;
  int n = 0;
  std::string curve;
  std::string sheet;
  uint64_t seed = 0;
  bool seed_set = false;
  double tolerance = 0.0;
  int samples = 0;
  int threads = 0;
  std::string out;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--config", f.config_path, "JSON model configuration file");
  cmd->add_option("--n", f.n, "ambient dimension N (>= 2)");
  cmd->add_option("--curve", f.curve, "curve kind (veronese)");
  cmd->add_option("--sheet", f.sheet, "sheet index or 'all'");
  cmd->add_option("--seed", f.seed, "deterministic sampling seed")
      ->each([&](const std::string&) { f.seed_set = true; });
  cmd->add_option("--tolerance", f.tolerance,
                  "base identity tolerance (scales every case threshold)");
  cmd->add_option("--samples", f.samples, "sample points per case");
  cmd->add_option("--threads", f.threads,
                  "worker cap (default: CPNSURF_THREADS, then hardware)");
  cmd->add_option("--out", f.out, "output path");
}

int resolve_config(const CommonFlags& f, cpn::ModelConfig& config) {
  try {
    if (!f.config_path.empty()) config = cpn::load_config_file(f.config_path);
    if (f.n > 0) config.n = f.n;
    if (!f.curve.empty()) {
      if (f.curve != "veronese") {
        std::fprintf(stderr, "error: --curve supports 'veronese' (use a config "
                             "file for polynomial curves)\n");
        return 2;
      }
      config.curve_kind = cpn::CurveKind::veronese;
    }
    if (!f.sheet.empty()) {
      if (f.sheet == "all")
        config.sheet = -1;
      else
        config.sheet = std::stoi(f.sheet);
    }
    if (f.seed_set) config.seed = f.seed;
    if (f.tolerance > 0.0) config.tolerance = f.tolerance;
    if (f.samples > 0) config.samples = f.samples;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  const auto errors = config.validate();
  if (!errors.empty()) {
    for (const auto& e : errors) std::fprintf(stderr, "error: %s\n", e.c_str());
    return 2;
  }
  return 0;
}

int cmd_verify(const CommonFlags& f, const std::string& filter) {
  cpn::ModelConfig config;
  if (int rc = resolve_config(f, config)) return rc;

  cpn::SuiteOptions opts;
  opts.seed = config.seed;
  opts.samples_per_case = config.samples;
  opts.filter = filter;
  opts.tol_scale = config.tolerance / 1e-9;
  opts.threads = f.threads;

  const auto reports = cpn::run_suite(opts);
  for (const auto& r : reports) {
    std::printf("%-32s %s  max_residual=%.3e  tol=%.1e%s\n", r.id.c_str(),
                r.pass ? "PASS" : "FAIL", r.max_residual, r.tolerance,
                r.negative_control ? "  [negative control]" : "");
  }
  const std::string json = cpn::reports_to_json(reports);
  if (!f.out.empty()) {
    cpn::atomic_write_text(f.out, json);
    std::printf("report written to %s\n", f.out.c_str());
  } else {
    std::fputs(json.c_str(), stdout);
  }
  if (reports.empty()) return 1;
  return cpn::all_passed(reports) ? 0 : 1;
}

int cmd_surface(const CommonFlags& f) {
  cpn::ModelConfig config;
  if (int rc = resolve_config(f, config)) return rc;
  if (config.space != cpn::ModelSpace::euclidean) {
    std::fprintf(stderr, "error: surface export needs euclidean space\n");
    return 2;
  }
  const int k = config.sheet < 0 ? 0 : config.sheet;
  try {
    const cpn::SurfaceGrid grid =
        cpn::surface_grid(config.curve(), k, config.grid.center,
                          config.grid.radius, config.grid.resolution);
    const std::string base = f.out.empty() ? std::string("surface") : f.out;
    const std::string csv_path =
        base.size() > 4 && base.substr(base.size() - 4) == ".csv"
            ? base
            : base + ".csv";
    cpn::atomic_write_text(csv_path, cpn::surface_grid_csv(grid));
    std::printf("wrote %s (%d rows)\n", csv_path.c_str(),
                grid.resolution * grid.resolution);
    if (config.n == 2) {
      const std::string obj_path = csv_path.substr(0, csv_path.size() - 4) + ".obj";
      cpn::atomic_write_text(obj_path, cpn::surface_grid_obj(grid));
      std::printf("wrote %s\n", obj_path.c_str());
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}

int cmd_scan(const CommonFlags& f, const std::string& kind) {
  cpn::ModelConfig config;
  if (int rc = resolve_config(f, config)) return rc;
  char buf[256];
  std::string csv;
  try {
    if (kind == "st-lambda" || kind == "mixed-constraint") {
      const int default_sheet = kind == "mixed-constraint" ? 1 : 0;
      const int k = config.sheet < 0 ? default_sheet : config.sheet;
      cpn::Rng rng(config.seed, "scan/" + kind, 0);
      const cpn::ProjectorChain chain =
          cpn::build_chain(config.curve(), rng.disk(2.0), 3);
      std::vector<double> grid;
      for (double s = -3.0; s <= 3.0 + 1e-12; s += 0.05) grid.push_back(s);
      if (kind == "st-lambda") {
        csv = "lambda_im,st_weierstrass_distance,pole\n";
        for (const auto& row :
             cpn::st_lambda_scan(chain, k, config.spectral.tau, grid)) {
          std::snprintf(buf, sizeof buf, "%.17g,%.17g,%d\n", row.lambda_im,
                        row.st_weierstrass_distance, row.pole ? 1 : 0);
          csv += buf;
        }
      } else {
        if (config.n < 3) {
          std::fprintf(stderr, "error: mixed-constraint scan needs n >= 3\n");
          return 2;
        }
        csv = "lambda_im,residual_matrix,residual_sextic,pole\n";
        for (const auto& row : cpn::st_mixed_constraint_scan(
                 chain, k, config.spectral.tau, grid)) {
          std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%d\n", row.lambda_im,
                        row.residual_matrix, row.residual_sextic, row.pole ? 1 : 0);
          csv += buf;
        }
      }
    } else if (kind == "fg-kappa") {
      const double lam = config.spectral.lambda.real();
      std::vector<double> grid;
      for (double kap = -2.0; kap <= 2.0 + 1e-12; kap += 0.01) grid.push_back(kap);
      csv = "kappa,lambda,ratio_residual,direction_residual,fitted_c1\n";
      for (const auto& row :
           cpn::kappa_coincidence_scan(config.spectral.omega, lam, grid)) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n",
                      row.kappa, row.lambda, row.ratio_residual,
                      row.direction_residual, row.fitted_c1);
        csv += buf;
      }
    } else {
      std::fprintf(stderr, "error: unknown scan kind '%s'\n", kind.c_str());
      return 2;
    }
    const std::string path = f.out.empty() ? ("scan_" + kind + ".csv") : f.out;
    cpn::atomic_write_text(path, csv);
    std::printf("wrote %s\n", path.c_str());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"soliton-surface toolkit for CP^{N-1} sigma models"};
  app.require_subcommand(1);

  CommonFlags vf, sf, cf;
  std::string filter;
  std::string scan_kind = "st-lambda";

  CLI::App* verify = app.add_subcommand("verify", "run the identity suite");
  add_common(verify, vf);
  verify->add_option("--filter", filter, "case-id prefix filter (e.g. P2.2)");

  CLI::App* surface = app.add_subcommand("surface", "export a surface grid");
  add_common(surface, sf);

  CLI::App* scan = app.add_subcommand("scan", "parameter scans");
  add_common(scan, cf);
  scan->add_option("--kind", scan_kind,
                   "st-lambda | fg-kappa | mixed-constraint");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return cmd_verify(vf, filter);
    if (surface->parsed()) return cmd_surface(sf);
    if (scan->parsed()) return cmd_scan(cf, scan_kind);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
