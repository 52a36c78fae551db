#pragma once

// Canonical-ensemble thermodynamics built on the compact spectrum
// E(n) = q1 - q2 [(n + delta) + q3 / (n + delta)]^2 with n treated as a
// continuous variable on [0, lambda].
//
// ln Z is the primary quantity. Every exponential is taken relative to the
// largest exponent on the interval, so U, S, F and C stay finite even where
// Z itself overflows a double (ln Z ~ 1.5e6 at lambda = 700, beta = 100 for
// the default potential).

#include <span>
#include <string>
#include <vector>

#include "mrey/core_params.hpp"

namespace mrey::thermo {

struct ThermoInput {
  SpectralCoefficients coeffs;
  double lambda = 1.0;  // upper vibrational bound, > 0
  double beta = 1.0;    // 1 / kT
  double k_boltzmann = 1.0;
};

struct ThermoState {
  double beta = 0.0;
  double lambda = 0.0;
  double ln_z = 0.0;
  double z = 0.0;  // exp(ln_z); +inf when it overflows
  double u = 0.0;
  double s = 0.0;
  double f = 0.0;
  double c = 0.0;
};

/// E_n for n = 0 .. floor(lambda).
std::vector<double> discrete_levels(const SpectralCoefficients& coeffs, double lambda);

/// Sum of e^{-beta E_n}, shifted by the smallest E_n. range_error when the
/// result overflows.
double partition_discrete(std::span<const double> energies, double beta);
double log_partition_discrete(std::span<const double> energies, double beta);

/// Z = e^{beta (2 q2 q3 - q1)} Int_{delta}^{lambda + delta}
///       e^{beta (q2 rho^2 + q2 q3^2 / rho^2)} d rho,
/// the spectrum substituted into the integral and the square expanded.
double log_partition_integral(const ThermoInput& in);
double partition_integral(const ThermoInput& in);

/// Z = Int_0^lambda e^{-beta E(n)} dn, coded directly on the spectrum.
double log_partition_direct(const ThermoInput& in);
double partition_direct(const ThermoInput& in);

/// U = -d ln Z / d beta, as the Boltzmann-weighted mean of E(n).
double mean_energy(const ThermoInput& in);
/// S = k ln Z + k beta U.
double entropy(const ThermoInput& in);
/// F = -ln Z / beta.
double free_energy(const ThermoInput& in);
/// C = k beta^2 d^2 ln Z / d beta^2 = k beta^2 Var(E).
double heat_capacity(const ThermoInput& in);

/// All of the above from one quadrature mesh. Requires beta > 0.
ThermoState evaluate(const ThermoInput& in);

/// Final adaptive mesh for Int_0^lambda e^{-beta (E(n) - e_ref)} dn, as
/// composite-rule nodes and weights. Lets callers re-evaluate ln Z at nearby
/// beta on frozen nodes (finite-difference checks).
struct BoltzmannMesh {
  std::vector<long double> nodes;
  std::vector<long double> weights;
  long double e_ref = 0.0L;  // min E on [0, lambda]
};

BoltzmannMesh boltzmann_mesh(const ThermoInput& in);

enum class SweepVariable { Beta, Lambda };

const char* to_string(SweepVariable v) noexcept;

struct PointError {
  std::size_t index = 0;
  std::string message;
};

struct ThermoCurve {
  SweepVariable sweep_variable = SweepVariable::Beta;
  double fixed_value = 0.0;  // lambda for a beta sweep, beta for a lambda sweep
  std::vector<double> grid;
  std::vector<double> ln_z, z, u, s, f, c;
  std::vector<PointError> errors;  // failed points hold NaN in every series
};

/// Throws domain_error unless `grid` is non-empty and strictly increasing.
ThermoCurve thermo_curve(const SpectralCoefficients& coeffs, SweepVariable sweep,
                         std::span<const double> grid, double fixed_value,
                         double k_boltzmann = 1.0);

}  // namespace mrey::thermo
