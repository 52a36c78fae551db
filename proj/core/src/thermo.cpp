#include "mrey/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mrey/errors.hpp"
#include "mrey/quadrature.hpp"

namespace mrey::thermo {

namespace {

using ld = long double;

constexpr double kQuadRelTol = 1e-12;

void check_input(const ThermoInput& in, bool need_positive_beta) {
  if (!(in.lambda > 0.0) || !std::isfinite(in.lambda)) {
    throw domain_error("lambda must be finite and > 0");
  }
  if (!std::isfinite(in.beta) || in.beta < 0.0 || (need_positive_beta && in.beta == 0.0)) {
    throw domain_error(need_positive_beta ? "beta must be finite and > 0"
                                          : "beta must be finite and >= 0");
  }
  if (!(in.coeffs.delta > 0.0)) throw domain_error("delta must be positive");
}

ld energy_ld(const SpectralCoefficients& c, ld n) {
  const ld rho = n + static_cast<ld>(c.delta);
  const ld g = rho + static_cast<ld>(c.q3) / rho;
  return static_cast<ld>(c.q1) - static_cast<ld>(c.q2) * g * g;
}

quad::Result adaptive(const quad::Integrand& f, ld a, ld b) {
  const std::vector<ld> bp = quad::endpoint_graded_breakpoints(a, b);
  quad::Options opts;
  opts.rel_tol = kQuadRelTol;
  opts.abs_tol = 0.0;
  quad::Result r = quad::integrate(f, bp, opts);
  if (!r.converged) {
    throw numerical_error("partition quadrature did not converge on [" +
                          std::to_string(static_cast<double>(a)) + ", " +
                          std::to_string(static_cast<double>(b)) + "]: estimated error " +
                          std::to_string(static_cast<double>(r.error)) + " after " +
                          std::to_string(r.evaluations) + " evaluations");
  }
  return r;
}

double finite_or_range_error(ld ln_z) {
  const double z = static_cast<double>(std::exp(ln_z));
  if (!std::isfinite(z)) {
    throw range_error("partition function overflows a double (ln Z = " +
                      std::to_string(static_cast<double>(ln_z)) + ")");
  }
  return z;
}

struct Moments {
  ld ln_z = 0.0L;
  ld mean = 0.0L;
  ld variance = 0.0L;
  ld entropy_over_k = 0.0L;  // ln Z + beta U without the e_ref cancellation
};

Moments moments(const ThermoInput& in) {
  const BoltzmannMesh mesh = boltzmann_mesh(in);
  const ld beta = in.beta;
  ld sum = 0.0L;
  ld first = 0.0L;
  std::vector<ld> p(mesh.nodes.size());
  std::vector<ld> e(mesh.nodes.size());
  for (std::size_t i = 0; i < mesh.nodes.size(); ++i) {
    e[i] = energy_ld(in.coeffs, mesh.nodes[i]);
    p[i] = mesh.weights[i] * std::exp(-beta * (e[i] - mesh.e_ref));
    sum += p[i];
    first += p[i] * (e[i] - mesh.e_ref);
  }
  Moments m;
  const ld shifted_mean = first / sum;
  m.mean = mesh.e_ref + shifted_mean;
  ld second = 0.0L;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const ld d = (e[i] - mesh.e_ref) - shifted_mean;
    second += p[i] * d * d;
  }
  m.variance = second / sum;
  m.ln_z = -beta * mesh.e_ref + std::log(sum);
  m.entropy_over_k = std::log(sum) + beta * shifted_mean;
  return m;
}

}  // namespace

std::vector<double> discrete_levels(const SpectralCoefficients& coeffs, double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw domain_error("lambda must be >= 0");
  const auto top = static_cast<int>(std::floor(lambda));
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(top) + 1);
  for (int n = 0; n <= top; ++n) out.push_back(static_cast<double>(energy_ld(coeffs, n)));
  return out;
}

double log_partition_discrete(std::span<const double> energies, double beta) {
  if (energies.empty()) throw domain_error("partition_discrete needs at least one level");
  for (double e : energies) {
    if (!std::isfinite(e)) throw domain_error("energies must be finite");
  }
  const double e_min = *std::min_element(energies.begin(), energies.end());
  ld sum = 0.0L;
  for (double e : energies) sum += std::exp(-static_cast<ld>(beta) * (static_cast<ld>(e) - e_min));
  return static_cast<double>(-static_cast<ld>(beta) * e_min + std::log(sum));
}

double partition_discrete(std::span<const double> energies, double beta) {
  return finite_or_range_error(log_partition_discrete(energies, beta));
}

double log_partition_integral(const ThermoInput& in) {
  check_input(in, false);
  const SpectralCoefficients& c = in.coeffs;
  const ld beta = in.beta;
  const ld q2 = c.q2;
  const ld q3 = c.q3;
  const auto exponent = [&](ld rho) { return beta * (q2 * rho * rho + q2 * q3 * q3 / (rho * rho)); };

  const ld lo = c.delta;
  const ld hi = static_cast<ld>(c.delta) + static_cast<ld>(in.lambda);
  // The exponent is convex in rho, so its maximum sits at an endpoint.
  const ld ref = std::max(exponent(lo), exponent(hi));
  const quad::Result r = adaptive([&](ld rho) { return std::exp(exponent(rho) - ref); }, lo, hi);
  const ld prefactor = beta * (2.0L * q2 * q3 - static_cast<ld>(c.q1));
  return static_cast<double>(prefactor + ref + std::log(r.value));
}

double partition_integral(const ThermoInput& in) {
  return finite_or_range_error(log_partition_integral(in));
}

BoltzmannMesh boltzmann_mesh(const ThermoInput& in) {
  check_input(in, false);
  const ld beta = in.beta;
  const ld lam = in.lambda;
  // E(n) has a single interior maximum, so its minimum is at an endpoint.
  const ld e_ref = std::min(energy_ld(in.coeffs, 0.0L), energy_ld(in.coeffs, lam));
  const quad::Result r = adaptive(
      [&](ld n) { return std::exp(-beta * (energy_ld(in.coeffs, n) - e_ref)); }, 0.0L, lam);
  quad::NodeSet ns = quad::kronrod_nodes(r.mesh);
  return {std::move(ns.x), std::move(ns.w), e_ref};
}

double log_partition_direct(const ThermoInput& in) {
  const BoltzmannMesh mesh = boltzmann_mesh(in);
  const ld beta = in.beta;
  ld sum = 0.0L;
  for (std::size_t i = 0; i < mesh.nodes.size(); ++i) {
    sum += mesh.weights[i] * std::exp(-beta * (energy_ld(in.coeffs, mesh.nodes[i]) - mesh.e_ref));
  }
  return static_cast<double>(-beta * mesh.e_ref + std::log(sum));
}

double partition_direct(const ThermoInput& in) {
  return finite_or_range_error(log_partition_direct(in));
}

ThermoState evaluate(const ThermoInput& in) {
  check_input(in, true);
  const Moments m = moments(in);
  const ld beta = in.beta;
  const ld k = in.k_boltzmann;
  ThermoState st;
  st.beta = in.beta;
  st.lambda = in.lambda;
  st.ln_z = static_cast<double>(m.ln_z);
  st.z = static_cast<double>(std::exp(m.ln_z));
  st.u = static_cast<double>(m.mean);
  st.s = static_cast<double>(k * m.entropy_over_k);
  st.f = static_cast<double>(-m.ln_z / beta);
  st.c = static_cast<double>(k * beta * beta * m.variance);
  return st;
}

double mean_energy(const ThermoInput& in) { return evaluate(in).u; }
double entropy(const ThermoInput& in) { return evaluate(in).s; }
double free_energy(const ThermoInput& in) { return evaluate(in).f; }
double heat_capacity(const ThermoInput& in) { return evaluate(in).c; }

const char* to_string(SweepVariable v) noexcept {
  return v == SweepVariable::Beta ? "beta" : "lambda";
}

ThermoCurve thermo_curve(const SpectralCoefficients& coeffs, SweepVariable sweep,
                         std::span<const double> grid, double fixed_value, double k_boltzmann) {
  if (grid.empty()) throw domain_error("thermo grid is empty");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw domain_error("thermo grid must be strictly increasing");
  }

  ThermoCurve curve;
  curve.sweep_variable = sweep;
  curve.fixed_value = fixed_value;
  curve.grid.assign(grid.begin(), grid.end());
  const std::size_t m = grid.size();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (auto* series : {&curve.ln_z, &curve.z, &curve.u, &curve.s, &curve.f, &curve.c}) {
    series->assign(m, nan);
  }

  for (std::size_t i = 0; i < m; ++i) {
    ThermoInput in;
    in.coeffs = coeffs;
    in.k_boltzmann = k_boltzmann;
    in.beta = sweep == SweepVariable::Beta ? grid[i] : fixed_value;
    in.lambda = sweep == SweepVariable::Lambda ? grid[i] : fixed_value;
    try {
      if (in.beta == 0.0) {
        // Only Z is defined at infinite temperature.
        curve.ln_z[i] = log_partition_direct(in);
        curve.z[i] = std::exp(curve.ln_z[i]);
        continue;
      }
      const ThermoState st = evaluate(in);
      curve.ln_z[i] = st.ln_z;
      curve.z[i] = st.z;
      curve.u[i] = st.u;
      curve.s[i] = st.s;
      curve.f[i] = st.f;
      curve.c[i] = st.c;
    } catch (const std::exception& e) {
      curve.errors.push_back({i, e.what()});
    }
  }
  return curve;
}

}  // namespace mrey::thermo
