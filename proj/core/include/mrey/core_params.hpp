#pragma once

// Physical constants, potential parameters and the coefficient maps shared by
// every other part of the library.
//
// The potential is the Manning-Rosen plus exponential Yukawa (MREY) form
//
//   V(r) = -(A1 e^{-ar} + A2 e^{-2ar}) / (1 - e^{-ar})^2 - A3 e^{-ar} / r
//
// with a the screening parameter. A1 and A2 carry units of energy and A3 of
// energy x length.

namespace mrey {

struct PhysicalConstants {
  double hbar = 1.0;
  double mu = 1.0;  // reduced mass
  double k_boltzmann = 1.0;

  /// Throws mrey::domain_error unless all three are finite and positive.
  void validate() const;
};

struct PotentialParams {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 1.0;
  double alpha = 0.5;

  /// Couplings must be finite; alpha finite and positive.
  void validate() const;
};

struct QuantumNumbers {
  int n = 0;
  int l = 0;
};

/// Scaled energy and couplings of the radial equation in s = e^{-alpha r}.
struct DimensionlessParams {
  double xi_sq = 0.0;  // -2 mu E / (hbar alpha)^2
  double x1 = 0.0;     // 2 mu A1 / (hbar alpha)^2
  double x2 = 0.0;     // 2 mu A2 / (hbar alpha)^2
  double x3 = 0.0;     // 2 mu A3 / (hbar^2 alpha)
};

/// Compact-form spectrum coefficients: E = q1 - q2 [(n + delta) + q3 / (n + delta)]^2.
struct SpectralCoefficients {
  double q1 = 0.0;
  double q2 = 0.0;
  double q3 = 0.0;
  double delta = 0.0;
  double radicand = 0.0;  // argument of the square root inside delta
};

enum class PotentialCase { General, ManningRosen, ExponentialYukawa, Free };

const char* to_string(PotentialCase c) noexcept;

/// Smallest alpha*r accepted by evaluate_potential; below it 1 - e^{-alpha r}
/// has no significant digits left.
inline constexpr double kMinScaledRadius = 1e-14;

double evaluate_potential(const PotentialParams& params, double r);

/// The A1/A2 part of the potential alone.
double manning_rosen_term(const PotentialParams& params, double r);

/// The A3 part of the potential alone.
double yukawa_term(const PotentialParams& params, double r);

PotentialCase classify_special_case(const PotentialParams& params) noexcept;

struct GreeneAldrich {
  double inv_r2_approx = 0.0;
  double inv_r_approx = 0.0;
};

/// 1/r^2 ~ alpha^2 / (1 - e^{-alpha r})^2 and 1/r ~ alpha / (1 - e^{-alpha r}).
/// The numerator is alpha^2, not alpha^2 e^{-alpha r}; both variants appear in
/// the literature and only this one reproduces the closed-form spectrum.
GreeneAldrich greene_aldrich(double alpha, double r);

DimensionlessParams dimensionless_params(const PotentialParams& params,
                                         const PhysicalConstants& consts,
                                         double energy);

/// 1 + 4 l(l+1) - 8 mu (A1 + A2) / (hbar alpha)^2.
double delta_radicand(const PotentialParams& params, const PhysicalConstants& consts, int l);

/// Throws negative_radicand_error when delta would be complex.
SpectralCoefficients spectral_coefficients(const PotentialParams& params,
                                           const PhysicalConstants& consts, int l);

inline double centrifugal(int l) noexcept { return static_cast<double>(l) * (l + 1); }

}  // namespace mrey
