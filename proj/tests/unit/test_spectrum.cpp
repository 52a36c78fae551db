#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "mrey/errors.hpp"
#include "mrey/nu_engine.hpp"
#include "mrey/spectrum.hpp"

using namespace mrey;

namespace {

const PotentialParams kDefault{0, 0, 1, 0.5};

double cancel_scale(const PotentialParams& p, int n, int l) {
  const SpectralCoefficients c = spectral_coefficients(p, {}, l);
  const double rho = n + c.delta;
  const double g = rho + c.q3 / rho;
  return std::max({std::fabs(c.q1), c.q2 * g * g, 1e-300});
}

}  // namespace

TEST(Energy, DefaultGroundState) {
  const EnergyLevel lv = energy(kDefault, {}, 0, 0);
  EXPECT_NEAR(lv.energy, -0.28125, 1e-15);
  EXPECT_NEAR(lv.u_value, 1.5, 1e-15);
  EXPECT_NEAR(lv.xi_sq, 2.25, 1e-15);
  EXPECT_TRUE(lv.valid_bound_state);
  EXPECT_FALSE(lv.marginal);
  EXPECT_TRUE(lv.strictly_bound());
}

TEST(Energy, FreeCaseIsNotBound) {
  const EnergyLevel lv = energy({0, 0, 0, 0.5}, {}, 0, 0);
  EXPECT_DOUBLE_EQ(lv.energy, -0.03125);
  EXPECT_NEAR(lv.u_value, -0.5, 1e-15);
  EXPECT_FALSE(lv.valid_bound_state);
}

TEST(Energy, MarginalLevel) {
  const EnergyLevel lv = energy(kDefault, {}, 1, 0);
  EXPECT_NEAR(lv.energy, 0.0, 1e-15);
  EXPECT_TRUE(lv.valid_bound_state);
  EXPECT_TRUE(lv.marginal);
  EXPECT_FALSE(lv.strictly_bound());
}

TEST(Energy, ErrorsPropagate) {
  EXPECT_THROW(energy({1, 1, 0, 0.5}, {}, 0, 0), negative_radicand_error);
  EXPECT_THROW(energy(kDefault, {}, -1, 0), domain_error);
  EXPECT_THROW(energy(kDefault, {}, 0, -1), domain_error);
  EXPECT_THROW(energy({0, 0, 1, 0.0}, {}, 0, 0), domain_error);
}

TEST(Energy, MatchesOracleOnBoundLevels) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> alpha(0.1, 1.0), a3(0.5, 10.0), a12(-0.5, 0.002);
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const PotentialParams p{a12(rng), a12(rng), a3(rng), alpha(rng)};
    for (int l = 0; l <= 3; ++l) {
      for (int n = 0; n <= 5; ++n) {
        EnergyLevel lv;
        try {
          lv = energy(p, {}, n, l);
        } catch (const negative_radicand_error&) {
          continue;
        }
        if (!lv.strictly_bound() || lv.u_value < 1e-6) continue;
        const double oracle = nu::solve_mrey_energy(p, {}, n, l);
        EXPECT_LT(std::fabs(oracle - lv.energy), 1e-9 * std::fabs(lv.energy)) << n << " " << l;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 200);
}

TEST(Forms, LongFormMatchesCompact) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> alpha(0.05, 2.0), a(-1.0, 5.0), a12(-1.0, 0.02);
  std::uniform_int_distribution<int> nd(0, 8), ld(0, 4);
  for (int i = 0; i < 1000; ++i) {
    const PotentialParams p{a12(rng), a12(rng), a(rng), alpha(rng)};
    const PhysicalConstants k{1.0, 1.0, 1.0};
    const int n = nd(rng), l = ld(rng);
    const double e1 = energy(p, k, n, l).energy;
    const double e2 = energy_long_form(p, k, n, l);
    EXPECT_LE(std::fabs(e1 - e2), 1e-12 * cancel_scale(p, n, l));
  }
}

TEST(Forms, ManningRosenReduction) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> alpha(0.05, 2.0), a12(-1.0, 0.02);
  std::uniform_int_distribution<int> nd(0, 8), ld(0, 4);
  for (int i = 0; i < 100; ++i) {
    const PotentialParams p{a12(rng), a12(rng), 0.0, alpha(rng)};
    const int n = nd(rng), l = ld(rng);
    EXPECT_LE(std::fabs(energy(p, {}, n, l).energy - energy_manning_rosen(p, {}, n, l)),
              1e-12 * cancel_scale(p, n, l));
  }
  EXPECT_THROW(energy_manning_rosen(kDefault, {}, 0, 0), domain_error);
}

TEST(Forms, ManningRosenFreeCase) {
  const PotentialParams p{0, 0, 0, 0.5};
  for (int n = 0; n < 4; ++n) {
    EXPECT_DOUBLE_EQ(energy_manning_rosen(p, {}, n, 0), -0.03125 * (n + 1.0) * (n + 1.0));
  }
}

TEST(Forms, YukawaReduction) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> alpha(0.05, 2.0), a3(-2.0, 10.0);
  std::uniform_int_distribution<int> nd(0, 8), ld(0, 4);
  for (int i = 0; i < 100; ++i) {
    const PotentialParams p{0.0, 0.0, a3(rng), alpha(rng)};
    const int n = nd(rng), l = ld(rng);
    EXPECT_LE(std::fabs(energy(p, {}, n, l).energy - energy_yukawa(p, {}, n, l)),
              1e-12 * cancel_scale(p, n, l));
  }
  EXPECT_THROW(energy_yukawa({1, 0, 1, 0.5}, {}, 0, 0), domain_error);
  EXPECT_NEAR(energy_yukawa(kDefault, {}, 0, 0), -0.28125, 1e-15);
}

TEST(Forms, CoulombLimit) {
  for (double alpha : {1e-3, 1e-4}) {
    for (int n = 0; n <= 2; ++n) {
      const double e = energy_yukawa({0, 0, 1, alpha}, {}, n, 0);
      EXPECT_LE(std::fabs(e + 0.5 / ((n + 1.0) * (n + 1.0))), 5 * alpha);
    }
  }
  EXPECT_NEAR(energy_yukawa({0, 0, 1, 1e-4}, {}, 0, 0), -0.5, 1e-3);
}

TEST(LambdaMax, HandValues) {
  EXPECT_NEAR(lambda_max({0, 0.03125, -4, 1, 1}), 1.0, 1e-15);
  EXPECT_NEAR(lambda_max({0, 0.03125, 4, 0.8, 0}), 1.2, 1e-15);
  EXPECT_DOUBLE_EQ(lambda_max({0, 0.03125, 0.25, 1, 1}), 0.0);
  EXPECT_THROW(lambda_max({0, 0.03125, 0, 1, 1}), domain_error);
}

TEST(LambdaMax, NumericCrossCheck) {
  for (double q3 : {-4.0, -9.0, 4.0, 30.0}) {
    const SpectralCoefficients c{0.3, 0.05, q3, 0.75, 0.25};
    EXPECT_NEAR(lambda_max_numeric(c), lambda_max(c), 1e-6);
  }
}

TEST(Table, ShapeAndOrder) {
  const SpectrumTable t = spectrum_table(kDefault, {}, 5, 3);
  ASSERT_EQ(t.rows.size(), 24u);
  EXPECT_TRUE(t.errors.empty());
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    EXPECT_EQ(t.rows[i].l, static_cast<int>(i / 6));
    EXPECT_EQ(t.rows[i].n, static_cast<int>(i % 6));
  }
  EXPECT_NEAR(t.rows[0].energy, -0.28125, 1e-15);
  EXPECT_NEAR(t.rows[1].energy, 0.0, 1e-15);
  EXPECT_NEAR(t.rows[2].energy, -0.03125 * (25.0 / 9.0), 1e-15);
  EXPECT_NEAR(t.rows[2].energy, -0.0868, 1e-4);
  EXPECT_FALSE(t.rows[1].strictly_bound());
  EXPECT_FALSE(t.rows[2].valid_bound_state);
}

TEST(Table, FreeCaseAllInvalid) {
  const SpectrumTable t = spectrum_table({0, 0, 0, 0.5}, {}, 5, 3);
  for (const EnergyLevel& lv : t.rows) EXPECT_FALSE(lv.valid_bound_state);
}

TEST(Table, PartialResultsWithManifest) {
  const SpectrumTable t = spectrum_table({0.2, 0.2, 0, 0.5}, {}, 2, 3);
  ASSERT_EQ(t.errors.size(), 2u);
  EXPECT_EQ(t.errors[0].l, 0);
  EXPECT_EQ(t.errors[1].l, 1);
  EXPECT_EQ(t.rows.size(), 6u);
  EXPECT_EQ(t.rows.front().l, 2);
}

TEST(Trend, EnergyIncreasesWithNOnBoundWindow) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> alpha(0.1, 1.0), a3(2.0, 20.0);
  for (int trial = 0; trial < 100; ++trial) {
    const PotentialParams p{0, 0, a3(rng), alpha(rng)};
    for (int l = 0; l <= 3; ++l) {
      double prev = -INFINITY;
      for (int n = 0; n <= 10; ++n) {
        const EnergyLevel lv = energy(p, {}, n, l);
        if (!lv.valid_bound_state) break;
        EXPECT_GT(lv.energy, prev);
        prev = lv.energy;
      }
    }
  }
}

TEST(Trend, EnergyIncreasesWithLOnBoundLevels) {
  const PotentialParams p{0, 0, 10, 0.5};
  for (int n = 0; n <= 3; ++n) {
    double prev = -INFINITY;
    for (int l = 0; l <= 3; ++l) {
      const EnergyLevel lv = energy(p, {}, n, l);
      if (!lv.valid_bound_state) break;
      EXPECT_GT(lv.energy, prev);
      prev = lv.energy;
    }
  }
}

TEST(Invariant, EnergyNeverExceedsQ1) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> alpha(0.05, 2.0), a(-5.0, 5.0), a12(-2.0, 0.05);
  for (int i = 0; i < 500; ++i) {
    const PotentialParams p{a12(rng), a12(rng), a(rng), alpha(rng)};
    for (int l = 0; l <= 3; ++l) {
      const SpectralCoefficients c = spectral_coefficients(p, {}, l);
      for (int n = 0; n <= 6; ++n) EXPECT_LE(compact_energy(c, n), c.q1);
    }
  }
}
