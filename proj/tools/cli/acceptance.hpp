#pragma once

#include <filesystem>
#include <string>

namespace mrey::cli {

inline constexpr int kCriterionCount = 11;

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs acceptance criterion `id` (1 .. kCriterionCount). `scratch` is a
/// writable directory for criteria that produce files. Never throws for a
/// failing check; unexpected exceptions become a failed result.
CriterionResult run_criterion(int id, const std::filesystem::path& scratch);

/// "PASS [ 5] hand-value anchor: ... (0.00 s)"
std::string format_result(const CriterionResult& r);

}  // namespace mrey::cli
