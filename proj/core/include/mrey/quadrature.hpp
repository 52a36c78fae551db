#pragma once

// Adaptive Gauss-Kronrod (7/15) quadrature with global bisection.
//
// The integrator hands back the final mesh so that related integrals (moments
// of the same weight, finite-difference probes) can be evaluated on identical
// nodes. Arithmetic is long double throughout.

#include <functional>
#include <span>
#include <vector>

namespace mrey::quad {

using Integrand = std::function<long double(long double)>;

struct Interval {
  long double a = 0.0L;
  long double b = 0.0L;
};

struct Options {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_intervals = 50000;
};

struct Result {
  long double value = 0.0L;
  long double error = 0.0L;   // estimated absolute error
  int evaluations = 0;
  bool converged = false;
  std::vector<Interval> mesh;  // sorted, contiguous
};

/// Integrates f over [breakpoints.front(), breakpoints.back()]. The
/// breakpoints seed the initial partition and must be strictly increasing.
Result integrate(const Integrand& f, std::span<const long double> breakpoints,
                 const Options& opts = {});

Result integrate(const Integrand& f, long double a, long double b, const Options& opts = {});

/// Nodes and weights of the composite 15-point Kronrod rule on a fixed mesh.
struct NodeSet {
  std::vector<long double> x;
  std::vector<long double> w;
};

NodeSet kronrod_nodes(std::span<const Interval> mesh);

/// Composite Kronrod rule on a fixed mesh (no adaptivity).
long double integrate_on_mesh(const Integrand& f, std::span<const Interval> mesh);

/// Fixed composite Gauss-Legendre rule with `panels` equal panels of `order`
/// points each; used as an independent cross-check of the adaptive scheme.
long double gauss_legendre(const Integrand& f, long double a, long double b, int panels,
                           int order = 20);

/// Breakpoints a, b plus geometric refinement toward both ends
/// (offsets (b-a) 2^-k, k = 1..levels). Resolves peaks pinned at an endpoint
/// whose width is unknown a priori.
std::vector<long double> endpoint_graded_breakpoints(long double a, long double b,
                                                     int levels = 60);

}  // namespace mrey::quad
