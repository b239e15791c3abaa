#include "cpnsurf/model_config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cpn {

using nlohmann::json;

namespace {
json cplx_to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

cplx cplx_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw Error("config: complex values are [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}
}  // namespace

ModelConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const std::exception& e) {
    throw Error(std::string("config: invalid JSON: ") + e.what());
  }
  ModelConfig c;
  if (j.contains("n")) c.n = j["n"].get<int>();
  if (j.contains("curve")) {
    const json& curve = j["curve"];
    const std::string kind = curve.value("kind", "veronese");
    if (kind == "veronese") {
      c.curve_kind = CurveKind::veronese;
    } else if (kind == "polynomial") {
      c.curve_kind = CurveKind::polynomial;
      if (curve.contains("coefficients")) {
        for (const json& comp : curve["coefficients"]) {
          std::vector<cplx> coeffs;
          for (const json& z : comp) coeffs.push_back(cplx_from_json(z));
          c.coefficients.push_back(std::move(coeffs));
        }
      }
    } else {
      throw Error("config: unknown curve kind '" + kind + "'");
    }
  }
  if (j.contains("space")) {
    const std::string s = j["space"].get<std::string>();
    if (s == "euclidean")
      c.space = ModelSpace::euclidean;
    else if (s == "minkowski")
      c.space = ModelSpace::minkowski;
    else
      throw Error("config: unknown space '" + s + "'");
  }
  if (j.contains("sheet")) {
    const json& sheet = j["sheet"];
    if (sheet.is_string()) {
      if (sheet.get<std::string>() != "all")
        throw Error("config: sheet must be an index or \"all\"");
      c.sheet = -1;
    } else {
      c.sheet = sheet.get<int>();
    }
  }
  if (j.contains("grid")) {
    const json& g = j["grid"];
    if (g.contains("center")) c.grid.center = cplx_from_json(g["center"]);
    if (g.contains("radius")) c.grid.radius = g["radius"].get<double>();
    if (g.contains("resolution")) c.grid.resolution = g["resolution"].get<int>();
  }
  if (j.contains("light_cone")) {
    const json& g = j["light_cone"];
    if (g.contains("x_plus")) {
      c.light_cone.x_plus_min = g["x_plus"][0].get<double>();
      c.light_cone.x_plus_max = g["x_plus"][1].get<double>();
    }
    if (g.contains("x_minus")) {
      c.light_cone.x_minus_min = g["x_minus"][0].get<double>();
      c.light_cone.x_minus_max = g["x_minus"][1].get<double>();
    }
    if (g.contains("resolution"))
      c.light_cone.resolution = g["resolution"].get<int>();
  }
  if (j.contains("spectral")) {
    const json& s = j["spectral"];
    if (s.contains("lambda")) c.spectral.lambda = cplx_from_json(s["lambda"]);
    if (s.contains("tau")) c.spectral.tau = s["tau"].get<double>();
    if (s.contains("kappa")) c.spectral.kappa = s["kappa"].get<double>();
    if (s.contains("c1")) c.spectral.c1 = s["c1"].get<double>();
    if (s.contains("c2")) c.spectral.c2 = s["c2"].get<double>();
    if (s.contains("c3")) c.spectral.c3 = s["c3"].get<double>();
    if (s.contains("omega")) c.spectral.omega = s["omega"].get<double>();
  }
  if (j.contains("tolerance")) c.tolerance = j["tolerance"].get<double>();
  if (j.contains("seed")) c.seed = j["seed"].get<uint64_t>();
  if (j.contains("samples")) c.samples = j["samples"].get<int>();
  return c;
}

std::string serialize_config(const ModelConfig& c) {
  json j;
  j["n"] = c.n;
  json curve;
  curve["kind"] = c.curve_kind == CurveKind::veronese ? "veronese" : "polynomial";
  if (c.curve_kind == CurveKind::polynomial) {
    json comps = json::array();
    for (const auto& comp : c.coefficients) {
      json one = json::array();
      for (const cplx& z : comp) one.push_back(cplx_to_json(z));
      comps.push_back(one);
    }
    curve["coefficients"] = comps;
  }
  j["curve"] = curve;
  j["space"] = c.space == ModelSpace::euclidean ? "euclidean" : "minkowski";
  if (c.sheet < 0)
    j["sheet"] = "all";
  else
    j["sheet"] = c.sheet;
  j["grid"] = {{"center", cplx_to_json(c.grid.center)},
               {"radius", c.grid.radius},
               {"resolution", c.grid.resolution}};
  j["light_cone"] = {
      {"x_plus", json::array({c.light_cone.x_plus_min, c.light_cone.x_plus_max})},
      {"x_minus",
       json::array({c.light_cone.x_minus_min, c.light_cone.x_minus_max})},
      {"resolution", c.light_cone.resolution}};
  j["spectral"] = {{"lambda", cplx_to_json(c.spectral.lambda)},
                   {"tau", c.spectral.tau},
                   {"kappa", c.spectral.kappa},
                   {"c1", c.spectral.c1},
                   {"c2", c.spectral.c2},
                   {"c3", c.spectral.c3},
                   {"omega", c.spectral.omega}};
  j["tolerance"] = c.tolerance;
  j["seed"] = c.seed;
  j["samples"] = c.samples;
  return j.dump(2) + "\n";
}

ModelConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("config: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::vector<std::string> ModelConfig::validate() const {
  std::vector<std::string> errors;
  if (n < 2) errors.push_back("n must be >= 2");
  if (n > kMaxDim) errors.push_back("n must be <= 12");
  if (sheet < -1 || sheet >= n) errors.push_back("sheet must be in [0, n-1] or \"all\"");
  if (grid.resolution < 2) errors.push_back("grid resolution must be >= 2");
  if (light_cone.resolution < 2)
    errors.push_back("light-cone resolution must be >= 2");
  if (!(grid.radius > 0.0)) errors.push_back("grid radius must be positive");
  if (!(spectral.tau > 0.0)) errors.push_back("tau must be positive");
  if (std::abs(spectral.lambda - cplx{1.0, 0.0}) < 1e-9 ||
      std::abs(spectral.lambda + cplx{1.0, 0.0}) < 1e-9)
    errors.push_back("lambda has poles at +-1");
  if (!(tolerance > 0.0)) errors.push_back("tolerance must be positive");
  if (samples < 1) errors.push_back("samples must be >= 1");
  if (curve_kind == CurveKind::polynomial) {
    if (static_cast<int>(coefficients.size()) != n)
      errors.push_back("polynomial curve needs exactly n component coefficient lists");
    bool all_zero = true;
    for (const auto& comp : coefficients)
      for (const cplx& z : comp)
        if (z != cplx{0.0, 0.0}) all_zero = false;
    if (all_zero && !coefficients.empty())
      errors.push_back("polynomial curve must not be the zero vector");
  }
  return errors;
}

HolomorphicCurve ModelConfig::curve() const {
  if (curve_kind == CurveKind::veronese) return veronese_curve(n);
  HolomorphicCurve c;
  c.n = n;
  c.coeffs = coefficients;
  return c;
}

bool operator==(const ModelConfig& a, const ModelConfig& b) {
  return serialize_config(a) == serialize_config(b);
}

}  // namespace cpn
