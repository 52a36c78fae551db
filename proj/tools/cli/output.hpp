#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "config.hpp"

namespace mrey::cli {

/// File could not be written (exit code 3).
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Cell = std::variant<std::int64_t, double, bool, std::string>;

struct DataTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Shortest text for a double at 17 significant digits ("%.17g").
std::string format_double(double v);

void write_csv(const DataTable& t, std::ostream& out);
/// Array of row objects keyed by column name; NaN and infinities become null.
void write_json(const DataTable& t, std::ostream& out);
void write_table(const DataTable& t, OutputFormat format, std::ostream& out);

/// Writes to `path` (parent directories created). Throws io_error.
void write_output(const DataTable& t, OutputFormat format, const std::filesystem::path& path);
void write_text(const std::string& text, const std::filesystem::path& path);

const char* extension(OutputFormat format) noexcept;

}  // namespace mrey::cli
