#pragma once

#include "cpnsurf/model_config.hpp"
#include "cpnsurf/surfaces.hpp"

#include <string>

namespace cpn {

/// One exported surface point: the base coordinates and the Killing
/// coordinates of X_k in the documented su(N) basis order.
struct SurfaceGridRow {
  double re_xi = 0.0;
  double im_xi = 0.0;
  std::vector<double> coords;  // N^2 - 1 entries
};

struct SurfaceGrid {
  int n = 0;
  int k = 0;
  int resolution = 0;
  std::vector<SurfaceGridRow> rows;  // resolution^2 rows, row-major over the grid
};

/// Samples X_k on a square grid (side 2*radius around center); grid points
/// where the curve normalization degenerates are resampled by nudging,
/// never dropped, so the row count stays resolution^2. Evaluation is a
/// parallel map capped by CPNSURF_THREADS.
SurfaceGrid surface_grid(const HolomorphicCurve& curve, int k, cplx center,
                         double radius, int resolution);

std::string surface_grid_csv(const SurfaceGrid& grid);

/// Triangulated mesh of the R^3 image; meaningful for N = 2 only.
std::string surface_grid_obj(const SurfaceGrid& grid);

/// Write-then-rename so readers never observe partial files.
void atomic_write_text(const std::string& path, const std::string& content);

}  // namespace cpn
