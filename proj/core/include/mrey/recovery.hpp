#pragma once

// Least-squares recovery of (A1, A2, A3) from a tabulated spectrum at fixed
// alpha, hbar and mu, together with the E <= Q1 feasibility test: for every
// real evaluation of the closed form E(n, l) <= q1(l), so any tabulated value
// above q1(l) leaves a residual no coupling choice can remove.
//
// The spectrum sees the couplings only through x1 + x2 and x2 - x3, so the
// fitted PotentialParams is one member of a one-parameter family of exact
// equivalents.

#include <span>
#include <string>
#include <vector>

#include "mrey/core_params.hpp"

namespace mrey {

struct TableEntry {
  int n = 0;
  int l = 0;
  double energy = 0.0;
};

struct BoundViolation {
  TableEntry entry;
  double q1 = 0.0;      // upper bound on E for this l
  double excess = 0.0;  // entry.energy - q1 > 0
};

struct RecoveryResult {
  PotentialParams fitted;
  std::vector<double> residuals;  // model - table, in input order
  double rms = 0.0;
  double max_abs = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<BoundViolation> violations;
  /// Largest excess over q1; no fit can have max_abs below it.
  double irreducible_floor = 0.0;
  bool feasible = true;  // no violations
  std::string verdict;
};

/// Rows whose energy exceeds q1(l) = hbar^2 alpha^2 l(l+1) / (2 mu).
std::vector<BoundViolation> bound_violations(std::span<const TableEntry> table, double alpha,
                                             const PhysicalConstants& consts);

/// Multi-start Levenberg-Marquardt on the scaled couplings (x1, x2, x3).
/// Starts and iteration order are fixed, so the result is deterministic.
RecoveryResult recover_params(std::span<const TableEntry> table, double alpha,
                              const PhysicalConstants& consts);

}  // namespace mrey
