#include "cpnsurf/exports.hpp"

#include "cpnsurf/property_suite.hpp"
#include "cpnsurf/su_basis.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <thread>

namespace cpn {

SurfaceGrid surface_grid(const HolomorphicCurve& curve, int k, cplx center,
                         double radius, int resolution) {
  if (resolution < 2) throw Error("surface_grid: degenerate grid");
  if (k < 0 || k >= curve.n) throw Error("surface_grid: sheet out of range");
  SurfaceGrid grid;
  grid.n = curve.n;
  grid.k = k;
  grid.resolution = resolution;
  grid.rows.resize(static_cast<size_t>(resolution) * resolution);

  const double step = 2.0 * radius / (resolution - 1);
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const size_t idx = next.fetch_add(1);
      if (idx >= grid.rows.size()) return;
      const int i = static_cast<int>(idx) / resolution;
      const int j = static_cast<int>(idx) % resolution;
      cplx xi = center + cplx{-radius + step * j, -radius + step * i};
      // Nudge off normalization singularities; the Veronese family never
      // needs it but polynomial curves may vanish at isolated points.
      for (int tries = 0; tries < 8 && curve.norm_at(xi) <= 1e-9; ++tries)
        xi += cplx{1e-7, 1e-7};
      const ProjectorChain chain = build_chain(curve, xi, 2);
      const CMatrix x = weierstrass_jet(chain, k).value();
      SurfaceGridRow row;
      row.re_xi = xi.real();
      row.im_xi = xi.imag();
      row.coords = su_coordinates(x);
      grid.rows[idx] = std::move(row);
    }
  };
  const int nthreads = std::min<int>(thread_cap(0), resolution);
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return grid;
}

std::string surface_grid_csv(const SurfaceGrid& grid) {
  std::string out = "re_xi,im_xi";
  char buf[64];
  for (size_t c = 0; c < grid.rows.front().coords.size(); ++c) {
    std::snprintf(buf, sizeof buf, ",x%zu", c + 1);
    out += buf;
  }
  out += "\n";
  for (const auto& row : grid.rows) {
    std::snprintf(buf, sizeof buf, "%.17g", row.re_xi);
    out += buf;
    std::snprintf(buf, sizeof buf, ",%.17g", row.im_xi);
    out += buf;
    for (double c : row.coords) {
      std::snprintf(buf, sizeof buf, ",%.17g", c);
      out += buf;
    }
    out += "\n";
  }
  return out;
}

std::string surface_grid_obj(const SurfaceGrid& grid) {
  if (grid.n != 2)
    throw Error("surface_grid_obj: OBJ export is the honest R^3 image for N = 2 only");
  std::string out = "# cpnsurf surface mesh, sheet " + std::to_string(grid.k) + "\n";
  char buf[160];
  for (const auto& row : grid.rows) {
    std::snprintf(buf, sizeof buf, "v %.12g %.12g %.12g\n", row.coords[0],
                  row.coords[1], row.coords[2]);
    out += buf;
  }
  const int res = grid.resolution;
  for (int i = 0; i + 1 < res; ++i) {
    for (int j = 0; j + 1 < res; ++j) {
      const int a = i * res + j + 1;  // OBJ indices are 1-based
      const int b = a + 1;
      const int c = a + res;
      const int d = c + 1;
      std::snprintf(buf, sizeof buf, "f %d %d %d\nf %d %d %d\n", a, b, d, a, d, c);
      out += buf;
    }
  }
  return out;
}

void atomic_write_text(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open '" + tmp + "' for writing");
    out << content;
    if (!out) throw Error("write failed for '" + tmp + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw Error("rename failed for '" + path + "'");
  }
}

}  // namespace cpn
