#pragma once

#include <string>
#include <vector>

#include "mrey/core_params.hpp"

namespace mrey {

struct EnergyLevel {
  int n = 0;
  int l = 0;
  double energy = 0.0;
  /// u >= 0 and xi^2 >= 0 (each within a 1e-12 relative tolerance).
  bool valid_bound_state = false;
  /// Valid, with u or xi^2 zero to tolerance (E = Q1 edge). Excluded from
  /// normalization.
  bool marginal = false;
  double u_value = 0.0;  // sqrt(c8) implied by the closed form
  double xi_sq = 0.0;

  /// Valid and not marginal.
  bool strictly_bound() const noexcept { return valid_bound_state && !marginal; }
};

/// E(n) = q1 - q2 [(n + delta) + q3 / (n + delta)]^2 at real n, the form
/// used by the thermodynamics and the stationary-point analysis.
double compact_energy(const SpectralCoefficients& c, double n);

/// Closed-form level with validity flags. Throws negative_radicand_error.
EnergyLevel energy(const PotentialParams& params, const PhysicalConstants& consts, int n, int l);

/// Expanded (long) form of the eigenvalue, coded from the raw couplings
/// without going through SpectralCoefficients.
double energy_long_form(const PotentialParams& params, const PhysicalConstants& consts, int n,
                        int l);

/// Manning-Rosen special case (A3 = 0), coded independently.
double energy_manning_rosen(const PotentialParams& params, const PhysicalConstants& consts,
                            int n, int l);

/// Exponential Yukawa special case (A1 = A2 = 0), coded independently.
/// Uses sqrt(1 + 4l(l+1)), which is what the general formula reduces to.
double energy_yukawa(const PotentialParams& params, const PhysicalConstants& consts, int n,
                     int l);

/// Stationary point of E(n): (n + delta)^2 = |q3|, so
/// lambda = sqrt(|q3|) - delta, clamped at 0. Throws domain_error for q3 == 0.
double lambda_max(const SpectralCoefficients& c);

/// Numerical maximizer of E(n) over [0, 10 (sqrt|q3| + delta)]; cross-check
/// for lambda_max.
double lambda_max_numeric(const SpectralCoefficients& c);

struct TableError {
  int l = 0;
  std::string message;
};

struct SpectrumTable {
  std::vector<EnergyLevel> rows;  // sorted by (l, n)
  PotentialParams params;
  PhysicalConstants consts;
  std::vector<TableError> errors;  // one entry per l that could not be built
};

/// All (n, l) with n <= n_max, l <= l_max. An l with a negative radicand is
/// skipped and recorded in `errors`; the remaining columns are still filled.
SpectrumTable spectrum_table(const PotentialParams& params, const PhysicalConstants& consts,
                             int n_max, int l_max);

}  // namespace mrey
