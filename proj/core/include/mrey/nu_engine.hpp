#pragma once

// Parametric Nikiforov-Uvarov machinery for equations of the form
//
//   psi'' + (c1 - c2 s) / (s (1 - c3 s)) psi'
//         + (-xi1 s^2 + xi2 s - xi3) / (s^2 (1 - c3 s)^2) psi = 0.
//
// c1, c2, c3 are free inputs here; the MREY problem is the special case
// c1 = c2 = c3 = 1 (see mrey_mapping).

#include <functional>

#include "mrey/core_params.hpp"

namespace mrey::nu {

struct NuCoefficients {
  double c1 = 1.0;
  double c2 = 1.0;
  double c3 = 1.0;
  double xi1 = 0.0;
  double xi2 = 0.0;
  double xi3 = 0.0;
};

struct NuDerived {
  double c4 = 0.0;
  double c5 = 0.0;
  double c6 = 0.0;
  double c7 = 0.0;
  double c8 = 0.0;
  double c9 = 0.0;
  // c10..c13 need sqrt(c8), sqrt(c9); NaN when real_branch is false.
  double c10 = 0.0;
  double c11 = 0.0;
  double c12 = 0.0;
  double c13 = 0.0;
  bool real_branch = true;
};

/// Exponents and Jacobi parameters of
/// psi(s) = s^{c12} (1 - c3 s)^{-c12 - c13/c3} P_n^{(c10-1, c11/c3-c10-1)}(1 - 2 c3 s).
struct WaveShape {
  double s_exponent = 0.0;
  double one_minus_s_exponent = 0.0;
  double jacobi_a = 0.0;
  double jacobi_b = 0.0;
  bool normalizable = false;  // both exponents strictly positive
};

enum class BranchPolicy {
  Throw,  // complex_branch_error when c8 < 0 or c9 < 0
  Flag,   // record real_branch = false and leave c10..c13 as NaN
};

NuDerived derive_constants(const NuCoefficients& coeffs,
                           BranchPolicy policy = BranchPolicy::Throw);

/// Left-hand side of the NU quantization condition; zero at an eigenvalue.
double quantization_residual(const NuCoefficients& coeffs, const NuDerived& derived, int n);

/// Throws domain_error if c3 == 0 or the branch is complex.
WaveShape wave_shape(const NuDerived& derived, double c3);

/// Coefficients of the MREY radial equation in s = e^{-alpha r} after the
/// Greene-Aldrich substitution: c1 = c2 = c3 = 1,
/// xi1 = xi^2 - x2 + x3, xi2 = 2 xi^2 + x1 + x3, xi3 = xi^2 + l(l+1).
NuCoefficients mrey_mapping(const DimensionlessParams& dp, int l);

struct EnergyBracket {
  double lo = 0.0;
  double hi = 0.0;
};

using EnergyMapping = std::function<NuCoefficients(double)>;

/// Numerical root of the quantization condition in energy, refined by
/// TOMS 748 inside `bracket`. Independent of the closed-form spectrum.
///
/// Throws no_root_error when the residual has no sign change over the
/// bracket, and domain_error when the NU branch is complex at a probe.
double solve_energy_oracle(const EnergyMapping& mapping, int n, EnergyBracket bracket);

/// Oracle for the MREY problem with an automatic bracket. The residual is
/// affine and increasing in sqrt(c8), so the bracket runs from
/// xi^2 = -l(l+1) (sqrt(c8) = 0) upward with geometric expansion.
/// Throws no_root_error when no root with sqrt(c8) >= 0 exists.
double solve_mrey_energy(const PotentialParams& params, const PhysicalConstants& consts,
                         int n, int l);

}  // namespace mrey::nu
