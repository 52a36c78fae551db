#include "app.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>
#include <unistd.h>

#include "CLI11.hpp"
#include "acceptance.hpp"
#include "commands.hpp"
#include "config.hpp"
#include "json.hpp"
#include "mrey/errors.hpp"
#include "output.hpp"

namespace mrey::cli {

namespace {

namespace fs = std::filesystem;

struct Overrides {
  std::string config_path;
  std::optional<double> hbar, mu, k, a1, a2, a3;
  std::vector<double> alpha;
  std::optional<int> n_max, l_max;
  std::optional<double> beta_min, beta_max, lambda_min, lambda_max, lambda_fixed;
  std::optional<int> beta_points, lambda_points;
  std::optional<std::string> output_dir, format;
};

void add_common_options(CLI::App& app, Overrides& o) {
  app.add_option("--config", o.config_path, "YAML config file")->check(CLI::ExistingFile);
  app.add_option("--hbar", o.hbar, "reduced Planck constant");
  app.add_option("--mu", o.mu, "reduced mass");
  app.add_option("--k", o.k, "Boltzmann constant");
  app.add_option("--a1", o.a1, "coupling A1");
  app.add_option("--a2", o.a2, "coupling A2");
  app.add_option("--a3", o.a3, "coupling A3");
  app.add_option("--alpha", o.alpha, "screening parameter (table accepts several)");
  app.add_option("--n-max", o.n_max, "largest n");
  app.add_option("--l-max", o.l_max, "largest l");
  app.add_option("--beta-min", o.beta_min, "beta grid start");
  app.add_option("--beta-max", o.beta_max, "beta grid end");
  app.add_option("--beta-points", o.beta_points, "beta grid size");
  app.add_option("--lambda-min", o.lambda_min, "lambda grid start");
  app.add_option("--lambda-max", o.lambda_max, "lambda grid end");
  app.add_option("--lambda-points", o.lambda_points, "lambda grid size");
  app.add_option("--lambda-fixed", o.lambda_fixed, "lambda for the beta sweep");
  app.add_option("--output-dir", o.output_dir, "write files here instead of stdout");
  app.add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

void apply_grid(GridSpec& g, const std::optional<double>& lo, const std::optional<double>& hi,
                const std::optional<int>& points) {
  if (!lo && !hi && !points) return;
  if (!g.values.empty()) {
    g.min = g.values.front();
    g.max = g.values.back();
    g.points = static_cast<int>(g.values.size());
    g.values.clear();
  }
  if (lo) g.min = *lo;
  if (hi) g.max = *hi;
  if (points) g.points = *points;
}

RunConfig effective_config(const Overrides& o) {
  RunConfig cfg = o.config_path.empty() ? RunConfig{} : load_config(o.config_path);
  if (o.hbar) cfg.consts.hbar = *o.hbar;
  if (o.mu) cfg.consts.mu = *o.mu;
  if (o.k) cfg.consts.k_boltzmann = *o.k;
  if (o.a1) cfg.potential.a1 = *o.a1;
  if (o.a2) cfg.potential.a2 = *o.a2;
  if (o.a3) cfg.potential.a3 = *o.a3;
  if (!o.alpha.empty()) cfg.potential.alpha = o.alpha.front();
  if (o.n_max) cfg.n_max = *o.n_max;
  if (o.l_max) cfg.l_max = *o.l_max;
  apply_grid(cfg.beta_grid, o.beta_min, o.beta_max, o.beta_points);
  apply_grid(cfg.lambda_grid, o.lambda_min, o.lambda_max, o.lambda_points);
  if (o.lambda_fixed) cfg.lambda_fixed = *o.lambda_fixed;
  if (o.output_dir) cfg.output_dir = *o.output_dir;
  if (o.format) cfg.format = parse_format(*o.format);
  cfg.validate();
  return cfg;
}

std::string alpha_label(double alpha) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", alpha);
  return buf;
}

void emit(const DataTable& t, const RunConfig& cfg, const std::string& stem, std::ostream& out) {
  if (cfg.output_dir.empty()) {
    write_table(t, cfg.format, out);
  } else {
    write_output(t, cfg.format, fs::path(cfg.output_dir) / (stem + extension(cfg.format)));
  }
}

int report_table_errors(const SpectrumTable& t, double alpha, std::ostream& err) {
  for (const TableError& e : t.errors) {
    err << "mrey: alpha " << alpha_label(alpha) << ", l = " << e.l << ": " << e.message << '\n';
  }
  return t.errors.empty() ? kExitOk : kExitInvalid;
}

int cmd_table(const Overrides& o, bool wide, std::ostream& out, std::ostream& err) {
  RunConfig cfg = effective_config(o);
  std::vector<double> alphas = o.alpha;
  if (alphas.empty()) {
    if (cfg.from_file("alpha")) {
      alphas = {cfg.potential.alpha};
    } else {
      alphas = {0.1, 0.2, 0.3, 0.4, 0.5};
    }
  }
  int status = kExitOk;
  nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
  std::ostringstream text;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    PotentialParams p = cfg.potential;
    p.alpha = alphas[i];
    p.validate();
    const SpectrumTable st = spectrum_table(p, cfg.consts, cfg.n_max, cfg.l_max);
    if (report_table_errors(st, p.alpha, err) != kExitOk) status = kExitInvalid;
    const DataTable t = wide ? wide_rows(st, cfg.n_max, cfg.l_max) : spectrum_rows(st.rows);
    if (!cfg.output_dir.empty()) {
      emit(t, cfg, std::string(wide ? "table_wide_alpha_" : "table_alpha_") + alpha_label(p.alpha), out);
    } else if (alphas.size() == 1) {
      write_table(t, cfg.format, text);
    } else if (cfg.format == OutputFormat::Json) {
      std::ostringstream js;
      write_json(t, js);
      blocks.push_back({{"alpha", p.alpha}, {"rows", nlohmann::ordered_json::parse(js.str())}});
    } else {
      if (i > 0) text << '\n';
      text << "# alpha=" << alpha_label(p.alpha) << '\n';
      write_csv(t, text);
    }
  }
  if (cfg.output_dir.empty()) {
    if (alphas.size() > 1 && cfg.format == OutputFormat::Json) {
      out << blocks.dump(2) << '\n';
    } else {
      out << text.str();
    }
  }
  return status;
}

int cmd_spectrum(const Overrides& o, std::optional<int> n, std::optional<int> l,
                 std::ostream& out, std::ostream& err) {
  const RunConfig cfg = effective_config(o);
  std::vector<EnergyLevel> levels;
  int status = kExitOk;
  if (n && l) {
    levels.push_back(energy(cfg.potential, cfg.consts, *n, *l));
  } else {
    const int n_lo = n.value_or(0), n_hi = n.value_or(cfg.n_max);
    const int l_lo = l.value_or(0), l_hi = l.value_or(cfg.l_max);
    for (int li = l_lo; li <= l_hi; ++li) {
      try {
        for (int ni = n_lo; ni <= n_hi; ++ni) levels.push_back(energy(cfg.potential, cfg.consts, ni, li));
      } catch (const negative_radicand_error& e) {
        err << "mrey: l = " << li << ": " << e.what() << '\n';
        status = kExitInvalid;
      }
    }
  }
  emit(spectrum_rows(levels), cfg, "spectrum", out);
  return status;
}

int cmd_wavefunction(const Overrides& o, int n, int l, int points, std::optional<double> r_max,
                     std::ostream& out) {
  const RunConfig cfg = effective_config(o);
  const EnergyLevel lv = energy(cfg.potential, cfg.consts, n, l);
  const RadialWave w = build_wave(cfg.potential, cfg.consts, lv);
  const double radius = r_max.value_or(tail_radius(w));
  emit(wave_rows(w, radius, points), cfg,
       "wavefunction_n" + std::to_string(n) + "_l" + std::to_string(l), out);
  return kExitOk;
}

int cmd_figures(const Overrides& o, double beta_fixed, std::ostream& out, std::ostream& err) {
  const RunConfig cfg = effective_config(o);
  const fs::path dir = cfg.output_dir.empty() ? fs::path("figures") : fs::path(cfg.output_dir);
  const FiguresResult res = write_figures(cfg, dir, beta_fixed);
  for (const FigureFile& f : res.figures) out << f.path.string() << '\n';
  out << res.beta_sweep_path.string() << '\n' << res.lambda_sweep_path.string() << '\n'
      << res.meta_path.string() << '\n';
  std::size_t failed = 0;
  for (const auto* c : {&res.beta_curve, &res.lambda_curve}) {
    for (const thermo::PointError& e : c->errors) {
      err << "mrey: " << thermo::to_string(c->sweep_variable) << " = " << c->grid[e.index] << ": "
          << e.message << '\n';
      ++failed;
    }
  }
  return failed == 0 ? kExitOk : kExitNumerical;
}

int cmd_recover(const Overrides& o, const std::string& table_path, std::ostream& out,
                std::ostream& err) {
  const RunConfig cfg = effective_config(o);
  const std::vector<TableEntry> rows = read_table_csv(table_path);
  const RecoveryResult r = recover_params(rows, cfg.potential.alpha, cfg.consts);
  const double unit = cfg.consts.hbar * cfg.consts.hbar * cfg.potential.alpha *
                      cfg.potential.alpha / (2.0 * cfg.consts.mu);

  DataTable t{{"n", "l", "E", "E_model", "residual", "q1", "exceeds_q1"}, {}};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double q1 = unit * centrifugal(rows[i].l);
    bool exceeds = false;
    for (const BoundViolation& v : r.violations) {
      exceeds = exceeds || (v.entry.n == rows[i].n && v.entry.l == rows[i].l && v.entry.energy == rows[i].energy);
    }
    t.rows.push_back({std::int64_t{rows[i].n}, std::int64_t{rows[i].l}, rows[i].energy,
                      rows[i].energy + r.residuals[i], r.residuals[i], q1, exceeds});
  }

  if (cfg.format == OutputFormat::Json) {
    std::ostringstream js;
    write_json(t, js);
    nlohmann::ordered_json j;
    j["alpha"] = cfg.potential.alpha;
    j["fitted"] = {{"a1", r.fitted.a1}, {"a2", r.fitted.a2}, {"a3", r.fitted.a3}};
    j["rms"] = r.rms;
    j["max_abs_residual"] = r.max_abs;
    j["irreducible_floor"] = r.irreducible_floor;
    j["feasible"] = r.feasible;
    j["converged"] = r.converged;
    j["verdict"] = r.verdict;
    j["rows"] = nlohmann::ordered_json::parse(js.str());
    if (cfg.output_dir.empty()) {
      out << j.dump(2) << '\n';
    } else {
      write_text(j.dump(2) + "\n", fs::path(cfg.output_dir) / "recovery.json");
    }
  } else {
    emit(t, cfg, "recovery", out);
    err << "fitted a1 = " << format_double(r.fitted.a1) << ", a2 = " << format_double(r.fitted.a2)
        << ", a3 = " << format_double(r.fitted.a3) << " (alpha = " << format_double(cfg.potential.alpha)
        << ")\nrms residual = " << format_double(r.rms)
        << ", max |residual| = " << format_double(r.max_abs) << '\n'
        << r.verdict << '\n';
  }
  return kExitOk;
}

int cmd_verify(const std::vector<int>& only, std::ostream& out) {
  std::vector<int> ids = only;
  if (ids.empty()) {
    for (int i = 1; i <= kCriterionCount; ++i) ids.push_back(i);
  }
  const fs::path scratch = fs::temp_directory_path() / ("mrey-verify-" + std::to_string(::getpid()));
  fs::create_directories(scratch);
  int failed = 0;
  for (int id : ids) {
    const CriterionResult r = run_criterion(id, scratch);
    out << format_result(r) << '\n' << std::flush;
    if (!r.passed) ++failed;
  }
  std::error_code ec;
  fs::remove_all(scratch, ec);
  out << (ids.size() - static_cast<std::size_t>(failed)) << "/" << ids.size() << " criteria passed\n";
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bound states and thermodynamics of the Manning-Rosen plus exponential Yukawa potential",
               "mrey"};
  app.require_subcommand(1);
  app.fallthrough();
  Overrides o;
  add_common_options(app, o);

  bool wide = false;
  auto* table = app.add_subcommand("table", "energy tables for alpha = 0.1 .. 0.5 or --alpha values");
  table->add_flag("--wide", wide, "one column per l");

  std::optional<int> sn, sl;
  auto* spectrum = app.add_subcommand("spectrum", "energies with validity flags");
  spectrum->add_option("--n", sn, "single n")->check(CLI::NonNegativeNumber);
  spectrum->add_option("--l", sl, "single l")->check(CLI::NonNegativeNumber);

  int wn = 0, wl = 0, points = 1000;
  std::optional<double> r_max;
  auto* wave = app.add_subcommand("wavefunction", "(r, psi) samples of one normalized level");
  wave->add_option("--n", wn, "radial quantum number")->required()->check(CLI::NonNegativeNumber);
  wave->add_option("--l", wl, "orbital quantum number")->required()->check(CLI::NonNegativeNumber);
  wave->add_option("--points", points, "number of radii")->check(CLI::PositiveNumber);
  wave->add_option("--r-max", r_max, "largest radius (default: 1e-12 tail radius)");

  double beta_fixed = 0.01;
  auto* figures = app.add_subcommand("figures", "Z, U, S, C, F against beta and lambda");
  figures->add_option("--beta-fixed", beta_fixed, "beta for the lambda sweep");

  std::string table_path;
  auto* recover = app.add_subcommand("recover-params", "fit A1, A2, A3 to a tabulated spectrum");
  recover->add_option("--table", table_path, "CSV with columns n,l,E")->required();

  std::vector<int> only;
  auto* verify = app.add_subcommand("verify", "run the acceptance checks");
  verify->add_option("--criterion", only, "run only these criteria")
      ->check(CLI::Range(1, kCriterionCount));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (table->parsed()) return cmd_table(o, wide, out, err);
    if (spectrum->parsed()) return cmd_spectrum(o, sn, sl, out, err);
    if (wave->parsed()) return cmd_wavefunction(o, wn, wl, points, r_max, out);
    if (figures->parsed()) return cmd_figures(o, beta_fixed, out, err);
    if (recover->parsed()) return cmd_recover(o, table_path, out, err);
    if (verify->parsed()) return cmd_verify(only, out);
  } catch (const config_error& e) {
    err << "mrey: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const mrey::domain_error& e) {
    err << "mrey: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const io_error& e) {
    err << "mrey: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const mrey::numerical_error& e) {
    err << "mrey: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "mrey: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}

}  // namespace mrey::cli
