#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "mrey/quadrature.hpp"

using namespace mrey::quad;

TEST(Quadrature, PolynomialExact) {
  const Result r = integrate([](long double x) { return x * x * x - 2 * x + 1; }, 0.0L, 2.0L);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(static_cast<double>(r.value), 4.0 - 4.0 + 2.0, 1e-15);
}

TEST(Quadrature, SmoothTranscendental) {
  const Result r = integrate([](long double x) { return std::exp(-x) * std::sin(3 * x); }, 0.0L,
                             10.0L, {1e-13, 0.0, 50000});
  const double exact = (3.0 - std::exp(-10.0) * (std::sin(30.0) + 3 * std::cos(30.0))) / 10.0;
  EXPECT_NEAR(static_cast<double>(r.value), exact, 1e-13);
}

TEST(Quadrature, EndpointPeakNeedsGrading) {
  // Width-1e-9 spike pinned at 0.
  const auto f = [](long double x) { return std::exp(-x * 1e9L); };
  const auto bp = endpoint_graded_breakpoints(0.0L, 1.0L);
  Options o;
  o.rel_tol = 1e-12;
  o.abs_tol = 0.0;
  const Result r = integrate(f, bp, o);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(static_cast<double>(r.value) * 1e9, 1.0, 1e-11);
}

TEST(Quadrature, GradedBreakpointsAreIncreasing) {
  const auto bp = endpoint_graded_breakpoints(2.0L, 5.0L, 10);
  // the 2^-1 offsets from both ends coincide at the midpoint
  ASSERT_EQ(bp.size(), 21u);
  EXPECT_EQ(bp.front(), 2.0L);
  EXPECT_EQ(bp.back(), 5.0L);
  for (std::size_t i = 1; i < bp.size(); ++i) EXPECT_LT(bp[i - 1], bp[i]);
}

TEST(Quadrature, MeshReuseReproducesValue) {
  const auto f = [](long double x) { return 1.0L / (1.0L + x * x); };
  const Result r = integrate(f, 0.0L, 1.0L);
  EXPECT_NEAR(static_cast<double>(integrate_on_mesh(f, r.mesh)), static_cast<double>(r.value),
              1e-15);
  const NodeSet ns = kronrod_nodes(r.mesh);
  long double s = 0.0L;
  for (std::size_t i = 0; i < ns.x.size(); ++i) s += ns.w[i] * f(ns.x[i]);
  EXPECT_NEAR(static_cast<double>(s), std::numbers::pi / 4, 1e-15);
  EXPECT_EQ(ns.x.size(), 15 * r.mesh.size());
}

TEST(Quadrature, GaussLegendreCrossCheck) {
  const auto f = [](long double x) { return std::cos(x) * std::exp(x / 3); };
  const long double a = integrate(f, -1.0L, 4.0L).value;
  const long double b = gauss_legendre(f, -1.0L, 4.0L, 8);
  EXPECT_NEAR(static_cast<double>(a), static_cast<double>(b), 1e-13);
}

TEST(Quadrature, NonConvergenceReported) {
  Options o;
  o.rel_tol = 1e-15;
  o.abs_tol = 0.0;
  o.max_intervals = 4;
  const Result r = integrate([](long double x) { return std::sqrt(x); }, 0.0L, 1.0L, o);
  EXPECT_FALSE(r.converged);
  EXPECT_GT(r.error, 0.0L);
}

TEST(Quadrature, Deterministic) {
  const auto f = [](long double x) { return std::log1p(x) * std::sin(x * 7); };
  const Result a = integrate(f, 0.0L, 3.0L), b = integrate(f, 0.0L, 3.0L);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.mesh.size(), b.mesh.size());
}
