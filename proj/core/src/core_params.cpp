#include "mrey/core_params.hpp"

#include <cmath>
#include <string>

#include "mrey/errors.hpp"

namespace mrey {

negative_radicand_error::negative_radicand_error(double radicand)
    : domain_error("no real delta: radicand 1 + 4l(l+1) - 8mu(A1+A2)/(hbar alpha)^2 = " +
                   std::to_string(radicand) + " is negative"),
      radicand_(radicand) {}

complex_branch_error::complex_branch_error(double c8, double c9)
    : domain_error("complex NU branch: c8 = " + std::to_string(c8) +
                   ", c9 = " + std::to_string(c9) + " (both must be >= 0)"),
      c8_(c8),
      c9_(c9) {}

void PhysicalConstants::validate() const {
  auto check = [](double v, const char* name) {
    if (!std::isfinite(v) || v <= 0.0) {
      throw domain_error(std::string(name) + " must be finite and > 0");
    }
  };
  check(hbar, "hbar");
  check(mu, "mu");
  check(k_boltzmann, "k");
}

void PotentialParams::validate() const {
  if (!std::isfinite(a1) || !std::isfinite(a2) || !std::isfinite(a3)) {
    throw domain_error("couplings a1, a2, a3 must be finite");
  }
  if (!std::isfinite(alpha) || alpha <= 0.0) {
    throw domain_error("alpha must be finite and > 0");
  }
}

const char* to_string(PotentialCase c) noexcept {
  switch (c) {
    case PotentialCase::General: return "general";
    case PotentialCase::ManningRosen: return "manning-rosen";
    case PotentialCase::ExponentialYukawa: return "exponential-yukawa";
    case PotentialCase::Free: return "free";
  }
  return "unknown";
}

namespace {

void check_radius(const PotentialParams& params, double r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw domain_error("potential requires finite r > 0");
  }
  if (params.alpha * r < kMinScaledRadius) {
    throw domain_error("alpha*r below 1e-14: Manning-Rosen denominator underflows");
  }
}

}  // namespace

double manning_rosen_term(const PotentialParams& params, double r) {
  check_radius(params, r);
  const double s = std::exp(-params.alpha * r);
  const double one_minus_s = -std::expm1(-params.alpha * r);
  const double v = -(params.a1 * s + params.a2 * s * s) / (one_minus_s * one_minus_s);
  if (!std::isfinite(v)) throw domain_error("Manning-Rosen term is not finite");
  return v;
}

double yukawa_term(const PotentialParams& params, double r) {
  check_radius(params, r);
  return -params.a3 * std::exp(-params.alpha * r) / r;
}

double evaluate_potential(const PotentialParams& params, double r) {
  const double v = manning_rosen_term(params, r) + yukawa_term(params, r);
  if (!std::isfinite(v)) throw domain_error("potential is not finite");
  return v;
}

PotentialCase classify_special_case(const PotentialParams& params) noexcept {
  const bool mr_zero = params.a1 == 0.0 && params.a2 == 0.0;
  const bool yk_zero = params.a3 == 0.0;
  if (mr_zero && yk_zero) return PotentialCase::Free;
  if (yk_zero) return PotentialCase::ManningRosen;
  if (mr_zero) return PotentialCase::ExponentialYukawa;
  return PotentialCase::General;
}

GreeneAldrich greene_aldrich(double alpha, double r) {
  if (!(alpha > 0.0) || !(r > 0.0)) {
    throw domain_error("greene_aldrich requires alpha > 0 and r > 0");
  }
  const double one_minus_s = -std::expm1(-alpha * r);
  return {alpha * alpha / (one_minus_s * one_minus_s), alpha / one_minus_s};
}

DimensionlessParams dimensionless_params(const PotentialParams& params,
                                         const PhysicalConstants& consts,
                                         double energy) {
  const double h2 = consts.hbar * consts.hbar;
  const double scale = 2.0 * consts.mu / (h2 * params.alpha * params.alpha);
  return {
      .xi_sq = -scale * energy,
      .x1 = scale * params.a1,
      .x2 = scale * params.a2,
      .x3 = 2.0 * consts.mu * params.a3 / (h2 * params.alpha),
  };
}

double delta_radicand(const PotentialParams& params, const PhysicalConstants& consts, int l) {
  const double h2a2 = consts.hbar * consts.hbar * params.alpha * params.alpha;
  return 1.0 + 4.0 * centrifugal(l) - 8.0 * consts.mu * params.a1 / h2a2 -
         8.0 * consts.mu * params.a2 / h2a2;
}

SpectralCoefficients spectral_coefficients(const PotentialParams& params,
                                           const PhysicalConstants& consts, int l) {
  if (l < 0) throw domain_error("l must be >= 0");
  const double h2 = consts.hbar * consts.hbar;
  const double a2 = params.alpha * params.alpha;
  const double ll = centrifugal(l);

  SpectralCoefficients c;
  c.radicand = delta_radicand(params, consts, l);
  if (c.radicand < 0.0) throw negative_radicand_error(c.radicand);

  c.q1 = h2 * a2 * ll / (2.0 * consts.mu);
  c.q2 = h2 * a2 / (8.0 * consts.mu);
  c.q3 = 2.0 * consts.mu * params.a2 / (h2 * a2) -
         2.0 * consts.mu * params.a3 / (h2 * params.alpha) + ll;
  c.delta = 0.5 + 0.5 * std::sqrt(c.radicand);
  return c;
}

}  // namespace mrey
