#include "config.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace mrey::cli {

namespace {

constexpr const char* kKeys[] = {"hbar",   "mu",          "k",           "a1",
                                 "a2",     "a3",          "alpha",       "n_max",
                                 "l_max",  "beta_grid",   "lambda_grid", "lambda_fixed",
                                 "output_dir", "format"};

std::string where(const std::string& source, const YAML::Mark& m) {
  return source + ":" + std::to_string(m.line + 1) + ":" + std::to_string(m.column + 1);
}

template <class T>
T scalar(const YAML::Node& node, const std::string& key, const std::string& source,
         const char* expected) {
  if (!node.IsScalar()) {
    throw config_error(where(source, node.Mark()) + ": key '" + key + "' expects " + expected);
  }
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    throw config_error(where(source, node.Mark()) + ": key '" + key + "' expects " + expected +
                       ", got '" + node.Scalar() + "'");
  }
}

GridSpec parse_grid(const YAML::Node& node, const std::string& key, const std::string& source) {
  GridSpec g;
  if (node.IsSequence()) {
    for (const YAML::Node& v : node) g.values.push_back(scalar<double>(v, key, source, "a number"));
    return g;
  }
  if (!node.IsMap()) {
    throw config_error(where(source, node.Mark()) + ": key '" + key +
                       "' expects a list of numbers or a map {min, max, points, spacing}");
  }
  bool has_min = false, has_max = false, has_points = false;
  for (const auto& kv : node) {
    const std::string sub = kv.first.as<std::string>();
    const std::string full = key + "." + sub;
    if (sub == "min") {
      g.min = scalar<double>(kv.second, full, source, "a number");
      has_min = true;
    } else if (sub == "max") {
      g.max = scalar<double>(kv.second, full, source, "a number");
      has_max = true;
    } else if (sub == "points") {
      g.points = scalar<int>(kv.second, full, source, "an integer");
      has_points = true;
    } else if (sub == "spacing") {
      const std::string s = scalar<std::string>(kv.second, full, source, "log or linear");
      if (s == "log") {
        g.spacing = Spacing::Log;
      } else if (s == "linear") {
        g.spacing = Spacing::Linear;
      } else {
        throw config_error(where(source, kv.second.Mark()) + ": key '" + full +
                           "' expects log or linear, got '" + s + "'");
      }
    } else {
      throw config_error(where(source, kv.first.Mark()) + ": unknown key '" + full + "'");
    }
  }
  if (!has_min || !has_max || !has_points) {
    throw config_error(where(source, node.Mark()) + ": key '" + key +
                       "' needs min, max and points");
  }
  return g;
}

}  // namespace

const char* to_string(OutputFormat f) noexcept { return f == OutputFormat::Json ? "json" : "csv"; }

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  throw config_error("format must be csv or json, got '" + s + "'");
}

std::vector<double> GridSpec::expand() const {
  if (!values.empty()) return values;
  if (points < 1) throw config_error("grid needs at least one point");
  if (points == 1) return {min};
  std::vector<double> out(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / (points - 1);
    out[static_cast<std::size_t>(i)] = spacing == Spacing::Log
                                           ? min * std::pow(max / min, t)
                                           : min + (max - min) * t;
  }
  out.front() = min;
  out.back() = max;
  return out;
}

bool RunConfig::from_file(const std::string& key) const {
  return std::find(keys_from_file.begin(), keys_from_file.end(), key) != keys_from_file.end();
}

void RunConfig::validate() const {
  const auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw config_error(std::string(name) + " must be finite and > 0");
    }
  };
  positive(consts.hbar, "hbar");
  positive(consts.mu, "mu");
  positive(consts.k_boltzmann, "k");
  positive(potential.alpha, "alpha");
  for (double a : {potential.a1, potential.a2, potential.a3}) {
    if (!std::isfinite(a)) throw config_error("a1, a2, a3 must be finite");
  }
  if (n_max < 0) throw config_error("n_max must be >= 0");
  if (l_max < 0) throw config_error("l_max must be >= 0");
  for (const auto& [grid, name] : {std::pair{&beta_grid, "beta_grid"},
                                   std::pair{&lambda_grid, "lambda_grid"}}) {
    if (grid->values.empty()) {
      if (grid->points < 1) throw config_error(std::string(name) + " needs points >= 1");
      if (grid->points > 1 && !(grid->max > grid->min)) {
        throw config_error(std::string(name) + " needs max > min");
      }
      if (grid->spacing == Spacing::Log && !(grid->min > 0.0)) {
        throw config_error(std::string(name) + " with log spacing needs min > 0");
      }
    }
    const std::vector<double> v = grid->expand();
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!std::isfinite(v[i]) || v[i] < 0.0) {
        throw config_error(std::string(name) + " values must be finite and >= 0");
      }
      if (i > 0 && !(v[i] > v[i - 1])) {
        throw config_error(std::string(name) + " must be strictly increasing");
      }
    }
  }
  if (lambda_grid.expand().front() <= 0.0) throw config_error("lambda_grid values must be > 0");
  if (lambda_fixed && (!(*lambda_fixed > 0.0) || !std::isfinite(*lambda_fixed))) {
    throw config_error("lambda_fixed must be finite and > 0");
  }
}

RunConfig parse_config(const std::string& text, const std::string& source) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    throw config_error(where(source, e.mark) + ": parse error: " + e.msg);
  }
  RunConfig cfg;
  if (root.IsNull()) return cfg;
  if (!root.IsMap()) throw config_error(where(source, root.Mark()) + ": expected a key: value mapping");

  for (const auto& kv : root) {
    const std::string key = kv.first.as<std::string>();
    const YAML::Node& v = kv.second;
    if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys)) {
      throw config_error(where(source, kv.first.Mark()) + ": unknown key '" + key + "'");
    }
    if (cfg.from_file(key)) {
      throw config_error(where(source, kv.first.Mark()) + ": duplicate key '" + key + "'");
    }
    cfg.keys_from_file.push_back(key);
    if (key == "hbar") cfg.consts.hbar = scalar<double>(v, key, source, "a number");
    else if (key == "mu") cfg.consts.mu = scalar<double>(v, key, source, "a number");
    else if (key == "k") cfg.consts.k_boltzmann = scalar<double>(v, key, source, "a number");
    else if (key == "a1") cfg.potential.a1 = scalar<double>(v, key, source, "a number");
    else if (key == "a2") cfg.potential.a2 = scalar<double>(v, key, source, "a number");
    else if (key == "a3") cfg.potential.a3 = scalar<double>(v, key, source, "a number");
    else if (key == "alpha") cfg.potential.alpha = scalar<double>(v, key, source, "a number");
    else if (key == "n_max") cfg.n_max = scalar<int>(v, key, source, "an integer");
    else if (key == "l_max") cfg.l_max = scalar<int>(v, key, source, "an integer");
    else if (key == "beta_grid") cfg.beta_grid = parse_grid(v, key, source);
    else if (key == "lambda_grid") cfg.lambda_grid = parse_grid(v, key, source);
    else if (key == "lambda_fixed") cfg.lambda_fixed = scalar<double>(v, key, source, "a number");
    else if (key == "output_dir") cfg.output_dir = scalar<std::string>(v, key, source, "a path");
    else if (key == "format") {
      const std::string f = scalar<std::string>(v, key, source, "csv or json");
      try {
        cfg.format = parse_format(f);
      } catch (const config_error& e) {
        throw config_error(where(source, v.Mark()) + ": " + e.what());
      }
    }
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw config_error("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path);
}

}  // namespace mrey::cli
