#include "mrey/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mrey/errors.hpp"
#include "mrey/quadrature.hpp"

namespace mrey {

namespace {

template <class Real>
Real jacobi_recurrence(int n, Real a, Real b, Real x) {
  if (n == 0) return Real(1);
  Real p_prev = Real(1);
  Real p = (a - b) / 2 + (a + b + 2) * x / 2;
  for (int k = 1; k < n; ++k) {
    const Real kk = k;
    const Real s = 2 * kk + a + b;
    const Real c_next = 2 * (kk + 1) * (kk + a + b + 1) * s;
    const Real c_cur = (s + 1) * ((s + 2) * s * x + a * a - b * b);
    const Real c_prev = 2 * (kk + a) * (kk + b) * (s + 2);
    const Real p_next = (c_cur * p - c_prev * p_prev) / c_next;
    p_prev = p;
    p = p_next;
  }
  return p;
}

// Generalized binomial C(n + a, n).
long double binomial_upper(int n, long double a) {
  long double c = 1.0L;
  for (int j = 1; j <= n; ++j) c *= (a + j) / j;
  return c;
}

long double shape_ld(const RadialWave& w, long double r) {
  const long double ar = static_cast<long double>(w.params.alpha) * r;
  const long double s = std::exp(-ar);
  const long double one_minus_s = -std::expm1(-ar);
  const long double radial =
      std::exp(-ar * w.beta_exp + w.zeta_exp * std::log(one_minus_s));
  return radial * jacobi_recurrence<long double>(w.jacobi.n, w.jacobi.a, w.jacobi.b,
                                                 1.0L - 2.0L * s);
}

constexpr double kTailFraction = 1e-12;

// Upper bound on the |psi/N|^2 tail beyond R: Pmax^2 e^{-2 alpha beta R} / (2 alpha beta).
// Radius at which that bound equals `target`.
double radius_for_tail(const RadialWave& w, double target) {
  const double rate = 2.0 * w.params.alpha * w.beta_exp;
  const double pmax = static_cast<double>(std::max(binomial_upper(w.jacobi.n, w.jacobi.a),
                                                   std::fabs(binomial_upper(w.jacobi.n, w.jacobi.b))));
  const double r = std::log(pmax * pmax / (rate * target)) / rate;
  return std::max(r, 1.0 / w.params.alpha);
}

quad::Result integrate_square(const RadialWave& w, double radius) {
  std::vector<long double> bp;
  constexpr int kPieces = 32;
  for (int i = 0; i <= kPieces; ++i) bp.push_back(static_cast<long double>(radius) * i / kPieces);
  quad::Options opts;
  opts.rel_tol = 1e-10;
  opts.abs_tol = 1e-14;
  auto f = [&](long double r) {
    const long double v = shape_ld(w, r);
    return v * v;
  };
  quad::Result res = quad::integrate(f, bp, opts);
  if (!res.converged) {
    throw numerical_error("normalization quadrature did not converge (estimated error " +
                          std::to_string(static_cast<double>(res.error)) + ")");
  }
  return res;
}

}  // namespace

double jacobi_eval(const JacobiParams& p, double x) {
  if (p.n < 0) throw domain_error("Jacobi degree must be >= 0");
  if (!(p.a > -1.0) || !(p.b > -1.0)) throw domain_error("Jacobi parameters must exceed -1");
  return jacobi_recurrence<double>(p.n, p.a, p.b, x);
}

double RadialWave::shape(double r) const { return static_cast<double>(shape_ld(*this, r)); }

RadialWave build_wave(const PotentialParams& params, const PhysicalConstants& consts,
                      const EnergyLevel& level) {
  if (!level.strictly_bound()) {
    throw domain_error("build_wave needs a strictly bound level (u > 0, xi^2 > 0); n = " +
                       std::to_string(level.n) + ", l = " + std::to_string(level.l) +
                       (level.marginal ? " is marginal" : " is not bound"));
  }
  const double ll = centrifugal(level.l);
  const DimensionlessParams dp = dimensionless_params(params, consts, level.energy);
  const double zeta_arg = 0.25 + ll - dp.x1 - dp.x2;
  if (zeta_arg < 0.0) throw negative_radicand_error(4.0 * zeta_arg);

  RadialWave w;
  w.params = params;
  w.consts = consts;
  w.level = level;
  w.beta_exp = std::sqrt(dp.xi_sq + ll);
  w.zeta_exp = 0.5 + std::sqrt(zeta_arg);
  w.jacobi = {level.n, 2.0 * w.beta_exp, 2.0 * w.zeta_exp - 1.0};
  w.norm = 1.0;
  w.norm = normalize(w);
  return w;
}

double tail_radius(const RadialWave& wave) {
  if (!(wave.beta_exp > 0.0)) throw domain_error("tail_radius needs beta > 0");
  const double generous = radius_for_tail(wave, 1e-30);
  const double total = static_cast<double>(integrate_square(wave, generous).value);
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw domain_error("radial profile is not square integrable");
  }
  return radius_for_tail(wave, kTailFraction * total);
}

double norm_squared(const RadialWave& wave) {
  const double radius = tail_radius(wave);
  return wave.norm * wave.norm * static_cast<double>(integrate_square(wave, radius).value);
}

double normalize(const RadialWave& wave) {
  if (!(wave.beta_exp > 0.0) || !(wave.zeta_exp > 0.0)) {
    throw domain_error("normalize needs beta > 0 and zeta > 0");
  }
  const double n2 = norm_squared(wave);
  if (!(n2 > 0.0) || !std::isfinite(n2)) throw domain_error("wave is not normalizable");
  return 1.0 / std::sqrt(n2);
}

std::vector<double> node_grid(const RadialWave& wave, int per_unit) {
  const double alpha = wave.params.alpha;
  const double r0 = 1e-6 / alpha;
  const double r1 = tail_radius(wave);
  const double step = 1.0 / (per_unit * alpha);
  const auto count = static_cast<std::size_t>(std::ceil((r1 - r0) / step)) + 1;
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) grid[i] = r0 + step * static_cast<double>(i);
  return grid;
}

int count_nodes(const RadialWave& wave, std::span<const double> grid) {
  if (grid.size() < 3) throw resolution_error("node grid needs at least three points");
  const double max_step = 1e-3 / wave.params.alpha * (1.0 + 1e-9);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw resolution_error("node grid must be strictly increasing");
    if (grid[i] - grid[i - 1] > max_step) {
      throw resolution_error("node grid coarser than 1000 points per unit of alpha r");
    }
  }

  int nodes = 0;
  long last_change = -2;
  int last_sign = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = wave.shape(grid[i]);
    const int sign = (v > 0.0) - (v < 0.0);
    if (sign == 0) continue;
    if (last_sign != 0 && sign != last_sign) {
      const long at = static_cast<long>(i);
      if (at - last_change <= 1) {
        throw resolution_error("adjacent sign changes at r = " + std::to_string(grid[i]) +
                               "; refine the grid");
      }
      last_change = at;
      ++nodes;
    }
    last_sign = sign;
  }
  return nodes;
}

double ode_residual(const RadialWave& wave, OdeForm form, int samples) {
  if (samples < 2) throw domain_error("ode_residual needs at least two samples");
  const PotentialParams& p = wave.params;
  const PhysicalConstants& c = wave.consts;
  const double alpha = p.alpha;
  const double ll = centrifugal(wave.level.l);
  const double two_mu_h2 = 2.0 * c.mu / (c.hbar * c.hbar);
  const double e = wave.level.energy;

  const double r_lo = 0.05 / alpha;
  const double r_hi = std::min(tail_radius(wave), std::log(1e8) / (alpha * wave.beta_exp));

  double max_residual = 0.0;
  double max_lead = 0.0;
  for (int j = 0; j < samples; ++j) {
    const double r = r_lo + (r_hi - r_lo) * j / (samples - 1);
    const double h = std::min(1e-4 / alpha, r / 10.0);
    const long double f0 = shape_ld(wave, r);
    const long double fp1 = shape_ld(wave, r + h), fm1 = shape_ld(wave, r - h);
    const long double fp2 = shape_ld(wave, r + 2 * h), fm2 = shape_ld(wave, r - 2 * h);
    const long double d2 =
        (-fp2 + 16.0L * fp1 - 30.0L * f0 + 16.0L * fm1 - fm2) / (12.0L * h * h);

    const double s = std::exp(-alpha * r);
    const double one_minus_s = -std::expm1(-alpha * r);
    double inv_r = 1.0 / r;
    double inv_r2 = inv_r * inv_r;
    if (form == OdeForm::Approximated) {
      const GreeneAldrich ga = greene_aldrich(alpha, r);
      inv_r = ga.inv_r_approx;
      inv_r2 = ga.inv_r2_approx;
    }
    const double v = -(p.a1 * s + p.a2 * s * s) / (one_minus_s * one_minus_s) - p.a3 * s * inv_r;
    const long double bracket = two_mu_h2 * (e - v) - ll * inv_r2;
    const long double residual = d2 + bracket * f0;

    max_residual = std::max(max_residual, static_cast<double>(std::fabs(residual)));
    max_lead = std::max(max_lead, static_cast<double>(std::fabs(d2)));
  }
  if (!(max_lead > 0.0)) throw numerical_error("ode_residual: second derivative vanished");
  return max_residual / max_lead;
}

OverlapMatrix overlap_matrix(const PotentialParams& params, const PhysicalConstants& consts,
                             int l, int n_max) {
  std::vector<RadialWave> waves;
  OverlapMatrix out;
  for (int n = 0; n <= n_max; ++n) {
    const EnergyLevel lv = energy(params, consts, n, l);
    if (!lv.strictly_bound()) continue;
    waves.push_back(build_wave(params, consts, lv));
    out.n_values.push_back(n);
  }
  double radius = 0.0;
  for (const RadialWave& w : waves) radius = std::max(radius, tail_radius(w));

  std::vector<long double> bp;
  for (int i = 0; i <= 32; ++i) bp.push_back(static_cast<long double>(radius) * i / 32);
  out.overlaps.assign(waves.size(), std::vector<double>(waves.size(), 0.0));
  for (std::size_t i = 0; i < waves.size(); ++i) {
    for (std::size_t j = i; j < waves.size(); ++j) {
      auto f = [&](long double r) {
        return waves[i].norm * shape_ld(waves[i], r) * waves[j].norm * shape_ld(waves[j], r);
      };
      const double v = static_cast<double>(quad::integrate(f, bp).value);
      out.overlaps[i][j] = v;
      out.overlaps[j][i] = v;
    }
  }
  return out;
}

}  // namespace mrey
