#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "config.hpp"
#include "mrey/recovery.hpp"
#include "mrey/spectrum.hpp"
#include "mrey/thermo.hpp"
#include "mrey/wavefunction.hpp"
#include "output.hpp"

namespace mrey::cli {

/// Long layout: n,l,E,valid. `valid` is true only for strictly bound levels.
DataTable spectrum_rows(const std::vector<EnergyLevel>& levels);

/// One row per n with columns E_l0 .. E_l<l_max>; missing entries are NaN.
DataTable wide_rows(const SpectrumTable& table, int n_max, int l_max);

/// r,psi samples of a normalized level on `points` equally spaced radii in
/// (0, r_max].
DataTable wave_rows(const RadialWave& wave, double r_max, int points);

/// beta,lambda,Z,U,S,F,C.
DataTable thermo_rows(const thermo::ThermoCurve& curve);

struct FigureFile {
  int number = 0;
  std::string quantity;  // Z, U, S, C or F
  thermo::SweepVariable sweep = thermo::SweepVariable::Beta;
  std::filesystem::path path;
};

struct FiguresResult {
  std::vector<FigureFile> figures;  // ten entries, figure order
  std::filesystem::path beta_sweep_path;
  std::filesystem::path lambda_sweep_path;
  std::filesystem::path meta_path;
  thermo::ThermoCurve beta_curve;
  thermo::ThermoCurve lambda_curve;
  double lambda_fixed = 0.0;
  double beta_fixed = 0.0;
};

/// Quantity order of the ten figure analogs; each appears as a beta sweep then
/// a lambda sweep.
inline constexpr const char* kFigureQuantities[] = {"Z", "U", "S", "C", "F"};

/// lambda_fixed from the config, else lambda_max for l = 0, else 1.
double effective_lambda_fixed(const RunConfig& cfg);

/// Computes both sweeps for l = 0 and writes the ten figure files, the two
/// full sweep tables and figures_meta.json into `dir`.
FiguresResult write_figures(const RunConfig& cfg, const std::filesystem::path& dir,
                            double beta_fixed);

/// Reads n,l,E rows (header required; extra columns ignored).
std::vector<TableEntry> read_table_csv(const std::filesystem::path& path);
std::vector<TableEntry> parse_table_csv(const std::string& text, const std::string& source);

/// Effective configuration as JSON text.
std::string config_json(const RunConfig& cfg);

}  // namespace mrey::cli
