#pragma once

#include "cpnsurf/chain.hpp"

#include <cstdint>
#include <string>

namespace cpn {

enum class CurveKind { veronese, polynomial };
enum class ModelSpace { euclidean, minkowski };

struct GridSpec {
  cplx center{0.0, 0.0};
  double radius = 2.0;
  int resolution = 32;
};

struct LightConeGrid {
  double x_plus_min = -1.0, x_plus_max = 1.0;
  double x_minus_min = -1.0, x_minus_max = 1.0;
  int resolution = 9;
};

struct SpectralConfig {
  cplx lambda{0.0, 0.5};
  double tau = 1.0;
  double kappa = -0.6;
  double c1 = 1.0, c2 = 0.0, c3 = 0.0;
  double omega = 1.0;
};

/// Single-document JSON model configuration; complex numbers are [re, im]
/// pairs. Flags on the CLI override individual fields.
struct ModelConfig {
  int n = 3;
  CurveKind curve_kind = CurveKind::veronese;
  std::vector<std::vector<cplx>> coefficients;  // polynomial curves only
  ModelSpace space = ModelSpace::euclidean;
  int sheet = -1;  // -1 means "all"
  GridSpec grid;
  LightConeGrid light_cone;
  SpectralConfig spectral;
  double tolerance = 1e-9;
  uint64_t seed = 42;
  int samples = 20;

  /// Empty when valid; otherwise one diagnostic per violated constraint.
  std::vector<std::string> validate() const;

  HolomorphicCurve curve() const;
};

ModelConfig parse_config(const std::string& json_text);
std::string serialize_config(const ModelConfig& config);
ModelConfig load_config_file(const std::string& path);

bool operator==(const ModelConfig& a, const ModelConfig& b);

}  // namespace cpn
