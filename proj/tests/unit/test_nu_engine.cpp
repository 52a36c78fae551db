#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "mrey/errors.hpp"
#include "mrey/nu_engine.hpp"
#include "mrey/spectrum.hpp"

using namespace mrey;
using namespace mrey::nu;

TEST(DeriveConstants, HandEvaluation) {
  const NuDerived d = derive_constants({1, 1, 1, 1, 2, 1});
  EXPECT_DOUBLE_EQ(d.c4, 0.0);
  EXPECT_DOUBLE_EQ(d.c5, -0.5);
  EXPECT_DOUBLE_EQ(d.c6, 1.25);
  EXPECT_DOUBLE_EQ(d.c7, -2.0);
  EXPECT_DOUBLE_EQ(d.c8, 1.0);
  EXPECT_DOUBLE_EQ(d.c9, 0.25);
  EXPECT_DOUBLE_EQ(d.c10, 3.0);
  EXPECT_DOUBLE_EQ(d.c11, 5.0);
  EXPECT_DOUBLE_EQ(d.c12, 1.0);
  EXPECT_DOUBLE_EQ(d.c13, -2.0);
  EXPECT_TRUE(d.real_branch);
}

TEST(DeriveConstants, ZeroXi) {
  const NuDerived d = derive_constants({1, 1, 1, 0, 0, 0});
  EXPECT_DOUBLE_EQ(d.c6, 0.25);
  EXPECT_DOUBLE_EQ(d.c7, 0.0);
  EXPECT_DOUBLE_EQ(d.c8, 0.0);
  EXPECT_DOUBLE_EQ(d.c9, 0.25);
  EXPECT_DOUBLE_EQ(d.c12, 0.0);
}

TEST(DeriveConstants, ComplexBranchThrowsWithValues) {
  // xi3 < 0 makes c8 negative.
  const NuCoefficients bad{1, 1, 1, 0, 0, -1};
  try {
    derive_constants(bad);
    FAIL() << "expected complex_branch_error";
  } catch (const complex_branch_error& e) {
    EXPECT_LT(e.c8(), 0.0);
  }
  const NuDerived d = derive_constants(bad, BranchPolicy::Flag);
  EXPECT_FALSE(d.real_branch);
  EXPECT_TRUE(std::isnan(d.c12));
}

TEST(Residual, ZeroXiGroundState) {
  const NuCoefficients c{1, 1, 1, 0, 0, 0};
  EXPECT_DOUBLE_EQ(quantization_residual(c, derive_constants(c), 0), 1.0);
}

TEST(Residual, VanishesAtClosedFormEnergy) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> alpha(0.1, 1.0), a3(0.5, 8.0), a12(-0.3, 0.05);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const PotentialParams p{a12(rng), a12(rng), a3(rng), alpha(rng)};
    for (int l = 0; l <= 3; ++l) {
      for (int n = 0; n <= 5; ++n) {
        EnergyLevel lv;
        try {
          lv = energy(p, {}, n, l);
        } catch (const domain_error&) {
          continue;
        }
        if (!lv.strictly_bound()) continue;
        const NuCoefficients c = mrey_mapping(dimensionless_params(p, {}, lv.energy), l);
        const NuDerived d = derive_constants(c);
        const double scale = 1.0 + std::fabs(c.xi1) + std::fabs(c.xi2) + std::fabs(c.xi3);
        EXPECT_LT(std::fabs(quantization_residual(c, d, n)) / scale, 1e-9);
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(WaveShape, ZeroCase) {
  const WaveShape w = wave_shape(derive_constants({1, 1, 1, 0, 0, 0}), 1.0);
  EXPECT_DOUBLE_EQ(w.s_exponent, 0.0);
  EXPECT_DOUBLE_EQ(w.jacobi_a, 0.0);
  EXPECT_DOUBLE_EQ(w.jacobi_b, 1.0);  // c11 = 3, c10 = 1
  EXPECT_FALSE(w.normalizable);
}

TEST(WaveShape, ZetaTelescopes) {
  const PotentialParams p{-0.1, 0.02, 3.0, 0.4};
  for (int l = 0; l <= 3; ++l) {
    const EnergyLevel lv = energy(p, {}, 0, l);
    const DimensionlessParams dp = dimensionless_params(p, {}, lv.energy);
    const WaveShape w = wave_shape(derive_constants(mrey_mapping(dp, l)), 1.0);
    const double ll = centrifugal(l);
    EXPECT_NEAR(w.one_minus_s_exponent, 0.5 + std::sqrt(0.25 + ll - dp.x1 - dp.x2), 1e-12);
    EXPECT_NEAR(w.s_exponent, std::sqrt(dp.xi_sq + ll), 1e-12);
  }
}

TEST(WaveShape, ZeroC3IsDomainError) {
  EXPECT_THROW(wave_shape(derive_constants({1, 1, 1, 1, 2, 1}), 0.0), domain_error);
}

TEST(Oracle, DefaultGroundState) {
  const PotentialParams p{0, 0, 1, 0.5};
  const EnergyMapping map = [&](double e) { return mrey_mapping(dimensionless_params(p, {}, e), 0); };
  EXPECT_NEAR(solve_energy_oracle(map, 0, {-1.0, -1e-6}), -0.28125, 1e-14);
  EXPECT_NEAR(solve_mrey_energy(p, {}, 0, 0), -0.28125, 1e-14);
}

TEST(Oracle, FreeCaseGroundState) {
  // The free-case level has u = -1/2, the negative branch of sqrt(c8); with
  // principal roots the residual is 1 + 2 sqrt(c8) > 0, so no bracket holds a root.
  const PotentialParams p{0, 0, 0, 0.5};
  const SpectralCoefficients c = spectral_coefficients(p, {}, 0);
  const double e = compact_energy(c, 0);
  EXPECT_DOUBLE_EQ(e, -0.03125);
  const NuCoefficients k = mrey_mapping(dimensionless_params(p, {}, e), 0);
  const NuDerived d = derive_constants(k);
  EXPECT_DOUBLE_EQ(quantization_residual(k, d, 0), 1.0 + 2.0 * std::sqrt(d.c8));
  const double r8 = std::sqrt(d.c8), r9 = std::sqrt(d.c9);
  const double negative_branch = -d.c5 + (r9 - r8) + d.c7 + 2.0 * d.c8 - 2.0 * r8 * r9;
  EXPECT_NEAR(negative_branch, 0.0, 1e-15);
  const EnergyMapping map = [&](double en) { return mrey_mapping(dimensionless_params(p, {}, en), 0); };
  EXPECT_THROW(solve_energy_oracle(map, 0, {-1.0, -1e-6}), no_root_error);
}

TEST(Oracle, NoRootInBracket) {
  const PotentialParams p{0, 0, 1, 0.5};
  const EnergyMapping map = [&](double e) { return mrey_mapping(dimensionless_params(p, {}, e), 0); };
  EXPECT_THROW(solve_energy_oracle(map, 0, {-10.0, -9.0}), no_root_error);
  EXPECT_THROW(solve_energy_oracle(map, 0, {-1.0, -2.0}), domain_error);
}

TEST(Oracle, ComplexBranchInsideBracket) {
  const PotentialParams p{0, 0, 1, 0.5};
  const EnergyMapping map = [&](double e) { return mrey_mapping(dimensionless_params(p, {}, e), 0); };
  // Positive energies give xi^2 < 0 and c8 < 0 at l = 0.
  EXPECT_THROW(solve_energy_oracle(map, 0, {-1.0, 1.0}), domain_error);
}

TEST(Oracle, NoBoundStateThrows) {
  EXPECT_THROW(solve_mrey_energy({0, 0, 0, 0.5}, {}, 0, 0), no_root_error);
}
