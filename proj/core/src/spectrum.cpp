#include "mrey/spectrum.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>
#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <cstdint>
#include <limits>

#include "mrey/errors.hpp"

namespace mrey {

namespace {

constexpr double kFlagTolerance = 1e-12;

void check_quantum_numbers(int n, int l) {
  if (n < 0 || l < 0) throw domain_error("quantum numbers n and l must be >= 0");
}

}  // namespace

double compact_energy(const SpectralCoefficients& c, double n) {
  const double rho = n + c.delta;
  const double g = rho + c.q3 / rho;
  return c.q1 - c.q2 * g * g;
}

EnergyLevel energy(const PotentialParams& params, const PhysicalConstants& consts, int n,
                   int l) {
  check_quantum_numbers(n, l);
  const SpectralCoefficients c = spectral_coefficients(params, consts, l);
  const double rho = n + c.delta;
  if (!(rho > 0.0)) throw domain_error("n + delta must be positive");

  EnergyLevel lv;
  lv.n = n;
  lv.l = l;
  lv.energy = compact_energy(c, n);
  lv.u_value = -(rho * rho + c.q3) / (2.0 * rho);
  const double ll = centrifugal(l);
  lv.xi_sq = lv.u_value * lv.u_value - ll;

  const double tol_u = kFlagTolerance * std::max({1.0, rho, std::fabs(c.q3) / rho});
  const double tol_xi = kFlagTolerance * std::max({1.0, lv.u_value * lv.u_value, ll});
  lv.valid_bound_state = lv.u_value >= -tol_u && lv.xi_sq >= -tol_xi;
  lv.marginal =
      lv.valid_bound_state && (std::fabs(lv.u_value) <= tol_u || std::fabs(lv.xi_sq) <= tol_xi);
  return lv;
}

double energy_long_form(const PotentialParams& params, const PhysicalConstants& consts, int n,
                        int l) {
  check_quantum_numbers(n, l);
  const double h2a2 = consts.hbar * consts.hbar * params.alpha * params.alpha;
  const double ll = static_cast<double>(l) * (l + 1);
  const double x1 = 2.0 * consts.mu * params.a1 / h2a2;
  const double x3 = 2.0 * consts.mu * params.a3 / (consts.hbar * consts.hbar * params.alpha);
  const double radicand = 1.0 + 4.0 * ll - 8.0 * consts.mu * params.a1 / h2a2 -
                          8.0 * consts.mu * params.a2 / h2a2;
  if (radicand < 0.0) throw negative_radicand_error(radicand);
  const double root = std::sqrt(radicand);
  const double nn = n;

  const double numerator = (nn * nn + nn + 0.5) + (nn + 0.5) * root - x1 - x3 + 2.0 * ll;
  const double denominator = 2.0 * nn + 1.0 + root;
  const double ratio = numerator / denominator;
  return -h2a2 / (2.0 * consts.mu) * ratio * ratio + h2a2 * ll / (2.0 * consts.mu);
}

double energy_manning_rosen(const PotentialParams& params, const PhysicalConstants& consts,
                            int n, int l) {
  check_quantum_numbers(n, l);
  if (params.a3 != 0.0) throw domain_error("Manning-Rosen formula requires a3 = 0");
  const double h2a2 = consts.hbar * consts.hbar * params.alpha * params.alpha;
  const double ll = static_cast<double>(l) * (l + 1);
  const double radicand =
      1.0 - 8.0 * consts.mu * params.a1 / h2a2 - 8.0 * consts.mu * params.a2 / h2a2 + 4.0 * ll;
  if (radicand < 0.0) throw negative_radicand_error(radicand);

  const double p = n + 0.5 + 0.5 * std::sqrt(radicand);
  const double bracket = (p * p + 2.0 * consts.mu * params.a2 / h2a2 + ll) / p;
  return h2a2 * ll / (2.0 * consts.mu) - h2a2 / (8.0 * consts.mu) * bracket * bracket;
}

double energy_yukawa(const PotentialParams& params, const PhysicalConstants& consts, int n,
                     int l) {
  check_quantum_numbers(n, l);
  if (params.a1 != 0.0 || params.a2 != 0.0) {
    throw domain_error("Yukawa formula requires a1 = a2 = 0");
  }
  const double h2 = consts.hbar * consts.hbar;
  const double h2a2 = h2 * params.alpha * params.alpha;
  const double ll = static_cast<double>(l) * (l + 1);
  const double root = std::sqrt(1.0 + 4.0 * ll);
  const double nn = n;

  const double numerator = (nn * nn + nn + 0.5) + (nn + 0.5) * root -
                           2.0 * consts.mu * params.a3 / (h2 * params.alpha) + 2.0 * ll;
  const double ratio = numerator / (2.0 * nn + 1.0 + root);
  return h2a2 * ll / (2.0 * consts.mu) - h2a2 / (2.0 * consts.mu) * ratio * ratio;
}

double lambda_max(const SpectralCoefficients& c) {
  if (c.q3 == 0.0) {
    throw domain_error("no interior stationary point: q3 = 0 makes E monotone in n");
  }
  return std::max(0.0, std::sqrt(std::fabs(c.q3)) - c.delta);
}

double lambda_max_numeric(const SpectralCoefficients& c) {
  if (c.q3 == 0.0) {
    throw domain_error("no interior stationary point: q3 = 0 makes E monotone in n");
  }
  const double upper = 10.0 * (std::sqrt(std::fabs(c.q3)) + c.delta);
  const auto neg_e = [&](double n) { return -compact_energy(c, n); };

  std::uintmax_t iters = 500;
  const auto [n_star, value] =
      boost::math::tools::brent_find_minima(neg_e, 0.0, upper, 40, iters);
  (void)value;

  // Polish with the root of a central-difference slope; the minimizer alone
  // stalls at ~sqrt(eps) on the flat top.
  const auto slope = [&](double n) {
    const double h = 1e-6 * std::max(1.0, n + c.delta);
    return (compact_energy(c, n + h) - compact_energy(c, n - h)) / (2.0 * h);
  };
  const double width = 1e-3 * std::max(1.0, n_star + c.delta);
  double lo = std::max(0.0, n_star - width);
  double hi = n_star + width;
  if (lo == 0.0 && slope(0.0) <= 0.0) return 0.0;
  double f_lo = slope(lo);
  double f_hi = slope(hi);
  if ((f_lo > 0.0) == (f_hi > 0.0)) return n_star;

  std::uintmax_t root_iters = 200;
  const boost::math::tools::eps_tolerance<double> tol(std::numeric_limits<double>::digits - 4);
  const auto [a, b] =
      boost::math::tools::toms748_solve(slope, lo, hi, f_lo, f_hi, tol, root_iters);
  return 0.5 * (a + b);
}

SpectrumTable spectrum_table(const PotentialParams& params, const PhysicalConstants& consts,
                             int n_max, int l_max) {
  if (n_max < 0 || l_max < 0) throw domain_error("n_max and l_max must be >= 0");
  SpectrumTable table;
  table.params = params;
  table.consts = consts;
  table.rows.reserve(static_cast<std::size_t>(n_max + 1) * (l_max + 1));
  for (int l = 0; l <= l_max; ++l) {
    try {
      spectral_coefficients(params, consts, l);
    } catch (const negative_radicand_error& e) {
      table.errors.push_back({l, e.what()});
      continue;
    }
    for (int n = 0; n <= n_max; ++n) table.rows.push_back(energy(params, consts, n, l));
  }
  return table;
}

}  // namespace mrey
