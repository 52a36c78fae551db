#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "mrey/core_params.hpp"
#include "mrey/errors.hpp"

using namespace mrey;

TEST(Potential, DecaysAtLargeRadius) {
  const PotentialParams p{1.0, 1.0, 1.0, 1.0};
  EXPECT_LT(std::fabs(evaluate_potential(p, 100.0)), 1e-12);
}

TEST(Potential, YukawaHandValue) {
  const PotentialParams p{0.0, 0.0, 1.0, 0.5};
  EXPECT_NEAR(evaluate_potential(p, 1.0), -std::exp(-0.5), 1e-15);
  EXPECT_NEAR(evaluate_potential(p, 1.0), -0.6065306597, 1e-10);
}

TEST(Potential, ManningRosenHandValue) {
  const PotentialParams p{1.0, 0.0, 0.0, 1.0};
  EXPECT_NEAR(evaluate_potential(p, std::log(2.0)), -2.0, 1e-14);
}

TEST(Potential, TermsAddUp) {
  const PotentialParams p{0.7, -0.3, 2.0, 0.8};
  for (double r : {0.1, 1.0, 3.0}) {
    EXPECT_DOUBLE_EQ(evaluate_potential(p, r), manning_rosen_term(p, r) + yukawa_term(p, r));
  }
}

TEST(Potential, TinyRadiusIsDomainError) {
  const PotentialParams p{1.0, 1.0, 1.0, 1.0};
  EXPECT_THROW(evaluate_potential(p, 1e-300), domain_error);
  EXPECT_THROW(evaluate_potential(p, 0.0), domain_error);
  EXPECT_THROW(evaluate_potential(p, -1.0), domain_error);
}

TEST(Params, ValidationRejectsBadValues) {
  EXPECT_THROW((PotentialParams{0, 0, 1, 0.0}).validate(), domain_error);
  EXPECT_THROW((PotentialParams{0, 0, 1, -1.0}).validate(), domain_error);
  EXPECT_THROW((PotentialParams{std::nan(""), 0, 1, 0.5}).validate(), domain_error);
  EXPECT_THROW((PhysicalConstants{0.0, 1.0, 1.0}).validate(), domain_error);
  EXPECT_THROW((PhysicalConstants{1.0, -1.0, 1.0}).validate(), domain_error);
  EXPECT_THROW((PhysicalConstants{1.0, 1.0, 0.0}).validate(), domain_error);
  EXPECT_NO_THROW((PotentialParams{-3, 2, -1, 0.1}).validate());
}

TEST(Classify, Cases) {
  EXPECT_EQ(classify_special_case({1, 2, 0, 0.5}), PotentialCase::ManningRosen);
  EXPECT_EQ(classify_special_case({0, 0, 3, 0.5}), PotentialCase::ExponentialYukawa);
  EXPECT_EQ(classify_special_case({0, 0, 0, 0.5}), PotentialCase::Free);
  EXPECT_EQ(classify_special_case({1, 0, 1, 0.5}), PotentialCase::General);
  EXPECT_EQ(classify_special_case({0, 1, 0, 0.5}), PotentialCase::ManningRosen);
  EXPECT_STREQ(to_string(PotentialCase::ExponentialYukawa), "exponential-yukawa");
}

TEST(GreeneAldrich, SmallRadiusLimit) {
  const GreeneAldrich g = greene_aldrich(0.5, 0.001);
  EXPECT_LT(std::fabs(g.inv_r2_approx * 1e-6 - 1.0), 1e-3);
  EXPECT_LT(std::fabs(g.inv_r_approx * 1e-3 - 1.0), 1e-3);
}

TEST(GreeneAldrich, HandValues) {
  const GreeneAldrich g = greene_aldrich(0.5, 1.0);
  EXPECT_NEAR(g.inv_r2_approx, 1.614800, 5e-6);
  EXPECT_NEAR(g.inv_r2_approx, 0.25 / std::pow(-std::expm1(-0.5), 2), 1e-15);
  EXPECT_NEAR(g.inv_r_approx, 1.270747, 1e-6);
  EXPECT_NEAR(g.inv_r2_approx, g.inv_r_approx * g.inv_r_approx, 1e-14);
}

TEST(Dimensionless, HandValues) {
  const DimensionlessParams d = dimensionless_params({0, 0, 1, 0.5}, {}, 0.0);
  EXPECT_DOUBLE_EQ(d.x3, 4.0);
  EXPECT_DOUBLE_EQ(d.xi_sq, 0.0);
  EXPECT_DOUBLE_EQ(d.x1, 0.0);
  EXPECT_DOUBLE_EQ(d.x2, 0.0);

  const DimensionlessParams e = dimensionless_params({1, 2, 3, 0.5}, {2.0, 3.0, 1.0}, -0.25);
  const double h2a2 = 4.0 * 0.25;
  EXPECT_DOUBLE_EQ(e.xi_sq, 2 * 3.0 * 0.25 / h2a2);
  EXPECT_DOUBLE_EQ(e.x1, 2 * 3.0 * 1 / h2a2);
  EXPECT_DOUBLE_EQ(e.x2, 2 * 3.0 * 2 / h2a2);
  EXPECT_DOUBLE_EQ(e.x3, 2 * 3.0 * 3 / (4.0 * 0.5));
}

TEST(Spectral, DefaultGround) {
  const SpectralCoefficients c = spectral_coefficients({0, 0, 1, 0.5}, {}, 0);
  EXPECT_DOUBLE_EQ(c.q1, 0.0);
  EXPECT_DOUBLE_EQ(c.q2, 0.03125);
  EXPECT_DOUBLE_EQ(c.q3, -4.0);
  EXPECT_DOUBLE_EQ(c.delta, 1.0);
  EXPECT_DOUBLE_EQ(c.radicand, 1.0);
}

TEST(Spectral, FreeCaseAtL1) {
  const SpectralCoefficients c = spectral_coefficients({0, 0, 0, 0.37}, {}, 1);
  // radicand 1 + 4 l(l+1) = 9
  EXPECT_DOUBLE_EQ(c.delta, 2.0);
  EXPECT_DOUBLE_EQ(c.q3, 2.0);
  EXPECT_GT(c.q2, 0.0);
  EXPECT_GE(c.q1, 0.0);
}

TEST(Spectral, NegativeRadicandCarriesValue) {
  try {
    spectral_coefficients({1, 1, 0, 0.5}, {}, 0);
    FAIL() << "expected negative_radicand_error";
  } catch (const negative_radicand_error& e) {
    EXPECT_DOUBLE_EQ(e.radicand(), 1.0 - 32.0 - 32.0);
    EXPECT_NE(std::string(e.what()).find("-63"), std::string::npos);
  }
  EXPECT_LT(delta_radicand({1, 1, 0, 0.5}, {}, 0), 0.0);
}

TEST(Spectral, DeltaAtLeastHalf) {
  for (int l = 0; l <= 3; ++l) {
    const SpectralCoefficients c = spectral_coefficients({-0.2, 0.01, 2.0, 0.3}, {}, l);
    EXPECT_GE(c.delta, 0.5);
  }
}
