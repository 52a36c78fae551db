#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>

#include "mrey/errors.hpp"
#include "mrey/recovery.hpp"
#include "mrey/spectrum.hpp"

using namespace mrey;

namespace {

std::vector<TableEntry> read_table(const std::string& name) {
  std::ifstream in(std::string(MREY_DATA_DIR) + "/tables/" + name);
  std::vector<TableEntry> rows;
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    TableEntry t;
    char c1, c2;
    ss >> t.n >> c1 >> t.l >> c2 >> t.energy;
    rows.push_back(t);
  }
  return rows;
}

}  // namespace

TEST(Recovery, RecoversSyntheticCouplings) {
  const PotentialParams truth{-0.05, 0.01, 6.0, 0.3};
  std::vector<TableEntry> rows;
  for (int l = 0; l <= 3; ++l) {
    for (int n = 0; n <= 5; ++n) rows.push_back({n, l, energy(truth, {}, n, l).energy});
  }
  const RecoveryResult r = recover_params(rows, truth.alpha, {});
  EXPECT_TRUE(r.feasible);
  EXPECT_LT(r.max_abs, 1e-10);
  // Only x1 + x2 and x2 - x3 enter the spectrum.
  const auto x = [](const PotentialParams& p) {
    const double s = 2.0 / (p.alpha * p.alpha);
    return std::pair{s * (p.a1 + p.a2), s * p.a2 - 2.0 * p.a3 / p.alpha};
  };
  EXPECT_NEAR(x(r.fitted).first, x(truth).first, 1e-8);
  EXPECT_NEAR(x(r.fitted).second, x(truth).second, 1e-8);
  EXPECT_EQ(r.verdict.rfind("feasible", 0), 0u);
}

TEST(Recovery, PaperTablesAreInfeasible) {
  for (const char* name : {"alpha_0.1.csv", "alpha_0.2.csv", "alpha_0.3.csv", "alpha_0.4.csv",
                           "alpha_0.5.csv"}) {
    const std::vector<TableEntry> rows = read_table(name);
    ASSERT_EQ(rows.size(), 24u);
    const double alpha = std::stod(std::string(name).substr(6, 3));
    const RecoveryResult r = recover_params(rows, alpha, {});
    EXPECT_FALSE(r.feasible) << name;
    EXPECT_GT(r.irreducible_floor, 0.0);
    EXPECT_GE(r.max_abs, r.irreducible_floor - 1e-12);
    EXPECT_EQ(r.verdict.rfind("infeasible", 0), 0u);
  }
}

TEST(Recovery, TableFiveViolatesBoundAtL0) {
  const std::vector<TableEntry> rows = read_table("alpha_0.5.csv");
  const auto v = bound_violations(rows, 0.5, {});
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v.front().entry.n, 0);
  EXPECT_EQ(v.front().entry.l, 0);
  EXPECT_DOUBLE_EQ(v.front().q1, 0.0);
  EXPECT_DOUBLE_EQ(v.front().excess, 0.109375);
}

TEST(Recovery, TableFiveSecondDifferences) {
  const std::vector<TableEntry> rows = read_table("alpha_0.5.csv");
  std::vector<double> e;
  for (const TableEntry& t : rows) {
    if (t.l == 0) e.push_back(t.energy);
  }
  ASSERT_EQ(e.size(), 6u);
  for (std::size_t i = 2; i < e.size(); ++i) {
    EXPECT_NEAR(e[i] - 2 * e[i - 1] + e[i - 2], -0.0625, 1e-12);
  }
  // Any Q3 = 0 configuration: E = q1 - q2 (n + delta)^2 has second difference -2 q2.
  const PotentialParams p{-0.2, 0.2, 0.4, 0.5};
  ASSERT_DOUBLE_EQ(spectral_coefficients(p, {}, 0).q3, 0.0);
  for (int n = 2; n <= 5; ++n) {
    const double d2 = energy(p, {}, n, 0).energy - 2 * energy(p, {}, n - 1, 0).energy +
                      energy(p, {}, n - 2, 0).energy;
    EXPECT_NEAR(d2, -0.0625, 1e-12);
  }
}

TEST(Recovery, InputErrors) {
  EXPECT_THROW(recover_params(std::vector<TableEntry>{}, 0.5, {}), domain_error);
  const std::vector<TableEntry> one{{0, 0, -0.1}};
  EXPECT_THROW(recover_params(one, 0.0, {}), domain_error);
  const std::vector<TableEntry> bad{{-1, 0, -0.1}};
  EXPECT_THROW(recover_params(bad, 0.5, {}), domain_error);
}

TEST(Recovery, Deterministic) {
  const std::vector<TableEntry> rows = read_table("alpha_0.3.csv");
  const RecoveryResult a = recover_params(rows, 0.3, {});
  const RecoveryResult b = recover_params(rows, 0.3, {});
  EXPECT_EQ(a.fitted.a1, b.fitted.a1);
  EXPECT_EQ(a.fitted.a3, b.fitted.a3);
  EXPECT_EQ(a.verdict, b.verdict);
}
