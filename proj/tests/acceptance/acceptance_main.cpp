// One line per acceptance criterion; exit status 1 if any fails.
//
//   mrey_acceptance            all criteria
//   mrey_acceptance 3 7        only criteria 3 and 7

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "acceptance.hpp"

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) {
    char* end = nullptr;
    const long v = std::strtol(argv[i], &end, 10);
    if (*end != '\0' || v < 1 || v > mrey::cli::kCriterionCount) {
      std::cerr << "usage: mrey_acceptance [criterion 1.." << mrey::cli::kCriterionCount << "]...\n";
      return 64;
    }
    ids.push_back(static_cast<int>(v));
  }
  if (ids.empty()) {
    for (int i = 1; i <= mrey::cli::kCriterionCount; ++i) ids.push_back(i);
  }

  const auto scratch = std::filesystem::temp_directory_path() /
                       ("mrey-acceptance-" + std::to_string(::getpid()));
  std::filesystem::create_directories(scratch);
  int failed = 0;
  for (int id : ids) {
    const mrey::cli::CriterionResult r = mrey::cli::run_criterion(id, scratch);
    std::cout << mrey::cli::format_result(r) << std::endl;
    if (!r.passed) ++failed;
  }
  std::error_code ec;
  std::filesystem::remove_all(scratch, ec);
  return failed == 0 ? 0 : 1;
}
