#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mrey/core_params.hpp"

namespace mrey::cli {

enum class OutputFormat { Csv, Json };

const char* to_string(OutputFormat f) noexcept;

/// Bad config file contents or flag values (exit code 2).
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Spacing { Log, Linear };

/// Either an explicit list of values or `points` samples on [min, max].
struct GridSpec {
  double min = 0.0;
  double max = 0.0;
  int points = 0;
  Spacing spacing = Spacing::Log;
  std::vector<double> values;

  std::vector<double> expand() const;
};

struct RunConfig {
  PhysicalConstants consts;
  PotentialParams potential;
  int n_max = 5;
  int l_max = 3;
  GridSpec beta_grid{0.1, 100.0, 20, Spacing::Log, {}};
  GridSpec lambda_grid{1.0, 700.0, 50, Spacing::Log, {}};
  std::optional<double> lambda_fixed;
  std::string output_dir;
  OutputFormat format = OutputFormat::Csv;

  /// Keys present in the loaded file; lets `table` tell a configured alpha
  /// from the default one.
  std::vector<std::string> keys_from_file;

  bool from_file(const std::string& key) const;
  void validate() const;
};

/// Flat YAML mapping with exactly the keys
/// hbar mu k a1 a2 a3 alpha n_max l_max beta_grid lambda_grid lambda_fixed
/// output_dir format. An empty file yields the defaults.
RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& text, const std::string& source = "<string>");

OutputFormat parse_format(const std::string& s);

}  // namespace mrey::cli
