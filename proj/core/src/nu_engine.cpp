#include "mrey/nu_engine.hpp"

#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "mrey/errors.hpp"

namespace mrey::nu {

NuDerived derive_constants(const NuCoefficients& k, BranchPolicy policy) {
  NuDerived d;
  d.c4 = 0.5 * (1.0 - k.c1);
  d.c5 = 0.5 * (k.c2 - 2.0 * k.c3);
  d.c6 = d.c5 * d.c5 + k.xi1;
  d.c7 = 2.0 * d.c4 * d.c5 - k.xi2;
  d.c8 = d.c4 * d.c4 + k.xi3;
  d.c9 = k.c3 * d.c7 + k.c3 * k.c3 * d.c8 + d.c6;

  if (d.c8 < 0.0 || d.c9 < 0.0) {
    if (policy == BranchPolicy::Throw) throw complex_branch_error(d.c8, d.c9);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    d.c10 = d.c11 = d.c12 = d.c13 = nan;
    d.real_branch = false;
    return d;
  }

  const double r8 = std::sqrt(d.c8);
  const double r9 = std::sqrt(d.c9);
  d.c10 = k.c1 + 2.0 * d.c4 + 2.0 * r8;
  d.c11 = k.c2 - 2.0 * d.c5 + 2.0 * (r9 + k.c3 * r8);
  d.c12 = d.c4 + r8;
  d.c13 = d.c5 - (r9 + k.c3 * r8);
  return d;
}

double quantization_residual(const NuCoefficients& k, const NuDerived& d, int n) {
  if (!d.real_branch || d.c8 < 0.0 || d.c9 < 0.0) throw complex_branch_error(d.c8, d.c9);
  if (n < 0) throw domain_error("n must be >= 0");
  const double nn = n;
  const double r8 = std::sqrt(d.c8);
  const double r9 = std::sqrt(d.c9);
  return k.c2 * nn - (2.0 * nn + 1.0) * d.c5 + (2.0 * nn + 1.0) * (r9 + k.c3 * r8) +
         nn * (nn - 1.0) * k.c3 + d.c7 + 2.0 * k.c3 * d.c8 + 2.0 * std::sqrt(d.c8 * d.c9);
}

WaveShape wave_shape(const NuDerived& d, double c3) {
  if (c3 == 0.0) throw domain_error("wave_shape: c3 must be nonzero");
  if (!d.real_branch) throw complex_branch_error(d.c8, d.c9);
  WaveShape w;
  w.s_exponent = d.c12;
  w.one_minus_s_exponent = -d.c12 - d.c13 / c3;
  w.jacobi_a = d.c10 - 1.0;
  w.jacobi_b = d.c11 / c3 - d.c10 - 1.0;
  w.normalizable = w.s_exponent > 0.0 && w.one_minus_s_exponent > 0.0;
  return w;
}

NuCoefficients mrey_mapping(const DimensionlessParams& dp, int l) {
  const double ll = centrifugal(l);
  return {
      .c1 = 1.0,
      .c2 = 1.0,
      .c3 = 1.0,
      .xi1 = dp.xi_sq - dp.x2 + dp.x3,
      .xi2 = 2.0 * dp.xi_sq + dp.x1 + dp.x3,
      .xi3 = dp.xi_sq + ll,
  };
}

namespace {

constexpr std::uintmax_t kMaxIterations = 200;

double residual_at(const EnergyMapping& mapping, int n, double energy) {
  const NuCoefficients k = mapping(energy);
  return quantization_residual(k, derive_constants(k), n);
}

}  // namespace

double solve_energy_oracle(const EnergyMapping& mapping, int n, EnergyBracket bracket) {
  if (!(bracket.lo < bracket.hi)) throw domain_error("oracle bracket must satisfy lo < hi");
  const double f_lo = residual_at(mapping, n, bracket.lo);
  const double f_hi = residual_at(mapping, n, bracket.hi);
  if (f_lo == 0.0) return bracket.lo;
  if (f_hi == 0.0) return bracket.hi;
  if ((f_lo > 0.0) == (f_hi > 0.0)) {
    throw no_root_error("no root in bracket [" + std::to_string(bracket.lo) + ", " +
                        std::to_string(bracket.hi) + "]");
  }

  std::uintmax_t iterations = kMaxIterations;
  const boost::math::tools::eps_tolerance<double> tol(std::numeric_limits<double>::digits - 2);
  const auto [a, b] = boost::math::tools::toms748_solve(
      [&](double e) { return residual_at(mapping, n, e); }, bracket.lo, bracket.hi, f_lo,
      f_hi, tol, iterations);
  if (iterations >= kMaxIterations) {
    throw numerical_error("oracle root refinement hit the iteration cap");
  }
  return 0.5 * (a + b);
}

double solve_mrey_energy(const PotentialParams& params, const PhysicalConstants& consts,
                         int n, int l) {
  params.validate();
  consts.validate();
  if (n < 0 || l < 0) throw domain_error("n and l must be >= 0");

  const double ll = centrifugal(l);
  const double energy_scale =
      consts.hbar * consts.hbar * params.alpha * params.alpha / (2.0 * consts.mu);
  const auto to_energy = [&](double xi_sq) { return -energy_scale * xi_sq; };

  const EnergyMapping mapping = [&](double energy) {
    return mrey_mapping(dimensionless_params(params, consts, energy), l);
  };

  // Nudge off sqrt(c8) = 0 so rounding cannot produce c8 < 0 at the endpoint.
  const double eps = std::numeric_limits<double>::epsilon();
  const double xi_lo = -ll + 8.0 * eps * std::max(1.0, ll);
  const double e_hi = to_energy(xi_lo);
  const double f_hi = residual_at(mapping, n, e_hi);
  if (f_hi >= 0.0) {
    throw no_root_error("no bound root: quantization residual is non-negative at sqrt(c8) = 0");
  }

  const DimensionlessParams dp = dimensionless_params(params, consts, 0.0);
  double xi_hi = 1.0 + std::fabs(dp.x1) + std::fabs(dp.x2) + std::fabs(dp.x3) + ll;
  for (int i = 0; i < 200; ++i) {
    if (residual_at(mapping, n, to_energy(xi_hi)) > 0.0) {
      return solve_energy_oracle(mapping, n, {to_energy(xi_hi), e_hi});
    }
    xi_hi *= 2.0;
  }
  throw no_root_error("bracket expansion failed to find a sign change");
}

}  // namespace mrey::nu
