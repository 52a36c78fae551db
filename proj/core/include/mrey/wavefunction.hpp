#pragma once

// Radial wavefunctions
//
//   psi(r) = N (e^{-alpha r})^beta (1 - e^{-alpha r})^zeta P_n^{(2 beta, 2 zeta - 1)}(1 - 2 e^{-alpha r})
//
// with beta = sqrt(xi^2 + l(l+1)) and zeta = 1/2 + sqrt(1/4 + l(l+1) - x1 - x2).
// zeta is the exponent the NU construction actually produces (-c12 - c13/c3);
// it coincides with delta of the spectrum. N is obtained numerically.

#include <span>
#include <vector>

#include "mrey/core_params.hpp"
#include "mrey/spectrum.hpp"

namespace mrey {

struct JacobiParams {
  int n = 0;
  double a = 0.0;
  double b = 0.0;
};

/// P_n^{(a,b)}(x) by the three-term recurrence. Requires a, b > -1.
double jacobi_eval(const JacobiParams& p, double x);

struct RadialWave {
  PotentialParams params;
  PhysicalConstants consts;
  EnergyLevel level;
  double beta_exp = 0.0;
  double zeta_exp = 0.0;
  JacobiParams jacobi;
  double norm = 1.0;

  /// psi without the normalization constant.
  double shape(double r) const;
  double operator()(double r) const { return norm * shape(r); }
};

/// Requires a strictly bound level (u > 0, xi^2 > 0). The returned wave is
/// normalized.
RadialWave build_wave(const PotentialParams& params, const PhysicalConstants& consts,
                      const EnergyLevel& level);

/// Radius beyond which the tail of |psi|^2 contributes less than 1e-12 of
/// the total.
double tail_radius(const RadialWave& wave);

/// Integral of |psi|^2 over (0, infinity) with the wave's current norm.
double norm_squared(const RadialWave& wave);

/// Factor c such that c * wave integrates to one in |psi|^2; 1 for an
/// already normalized wave.
double normalize(const RadialWave& wave);

/// Increasing grid over (0, tail_radius] with `per_unit` points per unit of
/// alpha r, starting at 1e-6 / alpha.
std::vector<double> node_grid(const RadialWave& wave, int per_unit = 1000);

/// Strict sign changes of psi along the grid. Throws resolution_error when
/// the grid is coarser than 1000 points per unit of alpha r or when two sign
/// changes fall in adjacent grid intervals.
int count_nodes(const RadialWave& wave, std::span<const double> grid);

enum class OdeForm {
  Approximated,  // 1/r^2 and 1/r replaced by their Greene-Aldrich forms
  Exact,         // the untouched radial equation
};

/// max |psi'' + [2 mu (E - V) / hbar^2 - l(l+1)/r^2] psi| / max |psi''|
/// over `samples` points, with psi'' from a 4th-order central stencil.
double ode_residual(const RadialWave& wave, OdeForm form = OdeForm::Approximated,
                    int samples = 200);

struct OverlapMatrix {
  std::vector<int> n_values;                  // strictly bound levels used
  std::vector<std::vector<double>> overlaps;  // <psi_n | psi_m>
};

/// Diagnostic only: levels carry different beta exponents, so the
/// approximated problem gives no orthogonality guarantee.
OverlapMatrix overlap_matrix(const PotentialParams& params, const PhysicalConstants& consts,
                             int l, int n_max);

}  // namespace mrey
