#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "mrey/errors.hpp"

namespace mrey::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json finite_or_null(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string f;
  while (std::getline(ss, f, ',')) out.push_back(trim(f));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

DataTable spectrum_rows(const std::vector<EnergyLevel>& levels) {
  DataTable t{{"n", "l", "E", "valid"}, {}};
  for (const EnergyLevel& lv : levels) {
    t.rows.push_back({std::int64_t{lv.n}, std::int64_t{lv.l}, lv.energy, lv.strictly_bound()});
  }
  return t;
}

DataTable wide_rows(const SpectrumTable& table, int n_max, int l_max) {
  DataTable t;
  t.columns.push_back("n");
  for (int l = 0; l <= l_max; ++l) t.columns.push_back("E_l" + std::to_string(l));
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (int n = 0; n <= n_max; ++n) {
    std::vector<Cell> row{std::int64_t{n}};
    for (int l = 0; l <= l_max; ++l) {
      double e = nan;
      for (const EnergyLevel& lv : table.rows) {
        if (lv.n == n && lv.l == l) e = lv.energy;
      }
      row.emplace_back(e);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

DataTable wave_rows(const RadialWave& wave, double r_max, int points) {
  if (points < 1) throw domain_error("points must be >= 1");
  if (!(r_max > 0.0) || !std::isfinite(r_max)) throw domain_error("r_max must be finite and > 0");
  DataTable t{{"r", "psi"}, {}};
  for (int i = 1; i <= points; ++i) {
    const double r = r_max * i / points;
    t.rows.push_back({r, wave(r)});
  }
  return t;
}

DataTable thermo_rows(const thermo::ThermoCurve& c) {
  DataTable t{{"beta", "lambda", "Z", "U", "S", "F", "C"}, {}};
  const bool beta_sweep = c.sweep_variable == thermo::SweepVariable::Beta;
  for (std::size_t i = 0; i < c.grid.size(); ++i) {
    const double beta = beta_sweep ? c.grid[i] : c.fixed_value;
    const double lambda = beta_sweep ? c.fixed_value : c.grid[i];
    t.rows.push_back({beta, lambda, c.z[i], c.u[i], c.s[i], c.f[i], c.c[i]});
  }
  return t;
}

double effective_lambda_fixed(const RunConfig& cfg) {
  if (cfg.lambda_fixed) return *cfg.lambda_fixed;
  const SpectralCoefficients c = spectral_coefficients(cfg.potential, cfg.consts, 0);
  if (c.q3 != 0.0) {
    const double lm = lambda_max(c);
    if (lm > 0.0) return lm;
  }
  return 1.0;
}

FiguresResult write_figures(const RunConfig& cfg, const std::filesystem::path& dir,
                            double beta_fixed) {
  if (!(beta_fixed >= 0.0) || !std::isfinite(beta_fixed)) {
    throw domain_error("beta_fixed must be finite and >= 0");
  }
  const SpectralCoefficients coeffs = spectral_coefficients(cfg.potential, cfg.consts, 0);
  FiguresResult res;
  res.lambda_fixed = effective_lambda_fixed(cfg);
  res.beta_fixed = beta_fixed;
  const std::vector<double> betas = cfg.beta_grid.expand();
  const std::vector<double> lambdas = cfg.lambda_grid.expand();
  res.beta_curve = thermo::thermo_curve(coeffs, thermo::SweepVariable::Beta, betas,
                                        res.lambda_fixed, cfg.consts.k_boltzmann);
  res.lambda_curve = thermo::thermo_curve(coeffs, thermo::SweepVariable::Lambda, lambdas,
                                          beta_fixed, cfg.consts.k_boltzmann);

  const std::string ext = extension(cfg.format);
  const DataTable beta_table = thermo_rows(res.beta_curve);
  const DataTable lambda_table = thermo_rows(res.lambda_curve);
  int number = 1;
  for (const char* q : kFigureQuantities) {
    for (const thermo::SweepVariable sweep :
         {thermo::SweepVariable::Beta, thermo::SweepVariable::Lambda}) {
      const DataTable& full = sweep == thermo::SweepVariable::Beta ? beta_table : lambda_table;
      std::size_t col = 0;
      while (full.columns[col] != q) ++col;
      DataTable t{{"beta", "lambda", q}, {}};
      for (const auto& row : full.rows) t.rows.push_back({row[0], row[1], row[col]});
      char name[64];
      std::snprintf(name, sizeof name, "figure_%02d_%s_vs_%s", number, q,
                    thermo::to_string(sweep));
      FigureFile f{number, q, sweep, dir / (std::string(name) + ext)};
      write_output(t, cfg.format, f.path);
      res.figures.push_back(f);
      ++number;
    }
  }
  res.beta_sweep_path = dir / ("thermo_beta_sweep" + ext);
  res.lambda_sweep_path = dir / ("thermo_lambda_sweep" + ext);
  write_output(beta_table, cfg.format, res.beta_sweep_path);
  write_output(lambda_table, cfg.format, res.lambda_sweep_path);

  ordered_json meta;
  meta["config"] = ordered_json::parse(config_json(cfg));
  meta["l"] = 0;
  meta["lambda_fixed"] = res.lambda_fixed;
  meta["beta_fixed"] = beta_fixed;
  meta["coefficients"] = {{"q1", coeffs.q1}, {"q2", coeffs.q2}, {"q3", coeffs.q3},
                          {"delta", coeffs.delta}};
  ordered_json files = ordered_json::array();
  for (const FigureFile& f : res.figures) {
    files.push_back({{"figure", f.number},
                     {"quantity", f.quantity},
                     {"sweep", thermo::to_string(f.sweep)},
                     {"file", f.path.filename().string()}});
  }
  meta["figures"] = files;
  ordered_json errors = ordered_json::array();
  for (const auto* curve : {&res.beta_curve, &res.lambda_curve}) {
    for (const thermo::PointError& e : curve->errors) {
      errors.push_back({{"sweep", thermo::to_string(curve->sweep_variable)},
                        {"value", curve->grid[e.index]},
                        {"message", e.message}});
    }
  }
  meta["point_errors"] = errors;
  res.meta_path = dir / "figures_meta.json";
  write_text(meta.dump(2) + "\n", res.meta_path);
  return res;
}

std::vector<TableEntry> parse_table_csv(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int col_n = -1, col_l = -1, col_e = -1;
  std::vector<TableEntry> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const std::vector<std::string> f = split(line);
    if (col_n < 0) {
      for (int i = 0; i < static_cast<int>(f.size()); ++i) {
        if (f[static_cast<std::size_t>(i)] == "n") col_n = i;
        if (f[static_cast<std::size_t>(i)] == "l") col_l = i;
        if (f[static_cast<std::size_t>(i)] == "E") col_e = i;
      }
      if (col_n < 0 || col_l < 0 || col_e < 0) {
        throw config_error(source + ":" + std::to_string(line_no) +
                           ": header must name columns n, l and E");
      }
      continue;
    }
    const int need = std::max({col_n, col_l, col_e});
    if (static_cast<int>(f.size()) <= need) {
      throw config_error(source + ":" + std::to_string(line_no) + ": too few fields");
    }
    TableEntry t;
    try {
      std::size_t pos = 0;
      const std::string& sn = f[static_cast<std::size_t>(col_n)];
      const std::string& sl = f[static_cast<std::size_t>(col_l)];
      const std::string& se = f[static_cast<std::size_t>(col_e)];
      t.n = std::stoi(sn, &pos);
      if (pos != sn.size()) throw std::invalid_argument(sn);
      t.l = std::stoi(sl, &pos);
      if (pos != sl.size()) throw std::invalid_argument(sl);
      t.energy = std::stod(se, &pos);
      if (pos != se.size()) throw std::invalid_argument(se);
    } catch (const std::exception&) {
      throw config_error(source + ":" + std::to_string(line_no) + ": cannot parse '" + line + "'");
    }
    rows.push_back(t);
  }
  if (rows.empty()) throw config_error(source + ": no data rows");
  return rows;
}

std::vector<TableEntry> read_table_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw config_error("cannot open table '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_table_csv(ss.str(), path.string());
}

std::string config_json(const RunConfig& cfg) {
  const auto grid_json = [](const GridSpec& g) {
    ordered_json j;
    if (g.values.empty()) {
      j["min"] = g.min;
      j["max"] = g.max;
      j["points"] = g.points;
      j["spacing"] = g.spacing == Spacing::Log ? "log" : "linear";
    }
    j["values"] = g.expand();
    return j;
  };
  ordered_json j;
  j["hbar"] = cfg.consts.hbar;
  j["mu"] = cfg.consts.mu;
  j["k"] = cfg.consts.k_boltzmann;
  j["a1"] = cfg.potential.a1;
  j["a2"] = cfg.potential.a2;
  j["a3"] = cfg.potential.a3;
  j["alpha"] = cfg.potential.alpha;
  j["n_max"] = cfg.n_max;
  j["l_max"] = cfg.l_max;
  j["beta_grid"] = grid_json(cfg.beta_grid);
  j["lambda_grid"] = grid_json(cfg.lambda_grid);
  j["lambda_fixed"] = cfg.lambda_fixed ? finite_or_null(*cfg.lambda_fixed) : ordered_json(nullptr);
  j["format"] = to_string(cfg.format);
  return j.dump(2);
}

}  // namespace mrey::cli
