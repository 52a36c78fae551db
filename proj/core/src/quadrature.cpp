#include "mrey/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>

namespace mrey::quad {

namespace {

// Kronrod abscissae (positive half) and weights; odd indices are the 7-point
// Gauss nodes.
constexpr long double kXgk[8] = {
    0.991455371120812639206854697526329L, 0.949107912342758524526189684047851L,
    0.864864423359769072789712788640926L, 0.741531185599394439863864773280788L,
    0.586087235467691130294144845693013L, 0.405845151377397166906606412076961L,
    0.207784955007898467600689403773245L, 0.000000000000000000000000000000000L,
};
constexpr long double kWgk[8] = {
    0.022935322010529224963732008058970L, 0.063092092629978553290700663189204L,
    0.104790010322250183839876322541518L, 0.140653259715525918745189590510238L,
    0.169004726639267902826583426598550L, 0.190350578064785409913256402421014L,
    0.204432940075298892414161999234649L, 0.209482141084727828012999174891714L,
};
constexpr long double kWg[4] = {
    0.129484966168869693270611432679082L, 0.279705391489276667901467771423780L,
    0.381830050505118944950369775488975L, 0.417959183673469387755102040816327L,
};

struct Panel {
  long double a;
  long double b;
  long double value;
  long double error;
};

struct ByError {
  bool operator()(const Panel& x, const Panel& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.a > y.a;  // deterministic tie-break
  }
};

// One 15-point Kronrod panel with the QUADPACK error heuristic.
Panel kronrod_panel(const Integrand& f, long double a, long double b) {
  const long double center = 0.5L * (a + b);
  const long double half = 0.5L * (b - a);

  const long double fc = f(center);
  long double result_k = fc * kWgk[7];
  long double result_g = fc * kWg[3];
  long double result_abs = std::fabs(result_k);
  long double fv1[7];
  long double fv2[7];
  for (int j = 0; j < 7; ++j) {
    const long double dx = half * kXgk[j];
    const long double f1 = f(center - dx);
    const long double f2 = f(center + dx);
    fv1[j] = f1;
    fv2[j] = f2;
    result_k += kWgk[j] * (f1 + f2);
    result_abs += kWgk[j] * (std::fabs(f1) + std::fabs(f2));
    if (j % 2 == 1) result_g += kWg[j / 2] * (f1 + f2);
  }
  const long double mean = 0.5L * result_k;
  long double result_asc = kWgk[7] * std::fabs(fc - mean);
  for (int j = 0; j < 7; ++j) {
    result_asc += kWgk[j] * (std::fabs(fv1[j] - mean) + std::fabs(fv2[j] - mean));
  }

  const long double ahalf = std::fabs(half);
  long double err = std::fabs((result_k - result_g) * half);
  result_asc *= ahalf;
  result_abs *= ahalf;
  if (result_asc != 0.0L && err != 0.0L) {
    err = result_asc * std::min(1.0L, std::pow(200.0L * err / result_asc, 1.5L));
  }
  const long double eps = std::numeric_limits<long double>::epsilon();
  if (result_abs > std::numeric_limits<long double>::min() / (50.0L * eps)) {
    err = std::max(50.0L * eps * result_abs, err);
  }
  return {a, b, result_k * half, err};
}

}  // namespace

Result integrate(const Integrand& f, std::span<const long double> breakpoints,
                 const Options& opts) {
  if (breakpoints.size() < 2) {
    throw std::invalid_argument("integrate: need at least two breakpoints");
  }
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i] > breakpoints[i - 1])) {
      throw std::invalid_argument("integrate: breakpoints must be strictly increasing");
    }
  }

  std::priority_queue<Panel, std::vector<Panel>, ByError> heap;
  Result out;
  long double total = 0.0L;
  long double total_err = 0.0L;
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    Panel p = kronrod_panel(f, breakpoints[i - 1], breakpoints[i]);
    out.evaluations += 15;
    total += p.value;
    total_err += p.error;
    heap.push(p);
  }

  auto tolerance = [&] {
    return std::max(static_cast<long double>(opts.abs_tol),
                    static_cast<long double>(opts.rel_tol) * std::fabs(total));
  };

  bool stalled = false;
  while (total_err > tolerance() && static_cast<int>(heap.size()) < opts.max_intervals) {
    Panel worst = heap.top();
    const long double mid = 0.5L * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      stalled = true;
      break;
    }
    heap.pop();
    Panel left = kronrod_panel(f, worst.a, mid);
    Panel right = kronrod_panel(f, mid, worst.b);
    out.evaluations += 30;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }

  // Re-sum from the panels to drop drift from the incremental updates.
  std::vector<Panel> panels;
  panels.reserve(heap.size());
  while (!heap.empty()) {
    panels.push_back(heap.top());
    heap.pop();
  }
  std::sort(panels.begin(), panels.end(),
            [](const Panel& x, const Panel& y) { return x.a < y.a; });
  total = 0.0L;
  total_err = 0.0L;
  out.mesh.reserve(panels.size());
  for (const Panel& p : panels) {
    total += p.value;
    total_err += p.error;
    out.mesh.push_back({p.a, p.b});
  }
  out.value = total;
  out.error = total_err;
  out.converged = !stalled && total_err <= tolerance();
  return out;
}

Result integrate(const Integrand& f, long double a, long double b, const Options& opts) {
  const long double bp[2] = {a, b};
  return integrate(f, bp, opts);
}

NodeSet kronrod_nodes(std::span<const Interval> mesh) {
  NodeSet nodes;
  nodes.x.reserve(mesh.size() * 15);
  nodes.w.reserve(mesh.size() * 15);
  for (const Interval& iv : mesh) {
    const long double center = 0.5L * (iv.a + iv.b);
    const long double half = 0.5L * (iv.b - iv.a);
    for (int j = 0; j < 7; ++j) {
      nodes.x.push_back(center - half * kXgk[j]);
      nodes.w.push_back(half * kWgk[j]);
    }
    nodes.x.push_back(center);
    nodes.w.push_back(half * kWgk[7]);
    for (int j = 6; j >= 0; --j) {
      nodes.x.push_back(center + half * kXgk[j]);
      nodes.w.push_back(half * kWgk[j]);
    }
  }
  return nodes;
}

long double integrate_on_mesh(const Integrand& f, std::span<const Interval> mesh) {
  long double total = 0.0L;
  for (const Interval& iv : mesh) total += kronrod_panel(f, iv.a, iv.b).value;
  return total;
}

long double gauss_legendre(const Integrand& f, long double a, long double b, int panels,
                           int order) {
  if (panels < 1 || order < 1) throw std::invalid_argument("gauss_legendre: bad sizes");

  // Legendre roots by Newton iteration from the Chebyshev-like initial guess.
  std::vector<long double> x(order), w(order);
  for (int i = 0; i < order; ++i) {
    long double z = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (order + 0.5L));
    long double dp = 0.0L;
    for (int it = 0; it < 100; ++it) {
      long double p0 = 1.0L, p1 = z;
      for (int k = 2; k <= order; ++k) {
        const long double p2 = ((2.0L * k - 1.0L) * z * p1 - (k - 1.0L) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (z * p1 - p0) / (z * z - 1.0L);
      const long double dz = p1 / dp;
      z -= dz;
      if (std::fabs(dz) < 1e-19L) break;
    }
    x[i] = z;
    w[i] = 2.0L / ((1.0L - z * z) * dp * dp);
  }

  const long double width = (b - a) / panels;
  long double total = 0.0L;
  for (int p = 0; p < panels; ++p) {
    const long double lo = a + width * p;
    const long double center = lo + 0.5L * width;
    long double sum = 0.0L;
    for (int i = 0; i < order; ++i) sum += w[i] * f(center + 0.5L * width * x[i]);
    total += 0.5L * width * sum;
  }
  return total;
}

std::vector<long double> endpoint_graded_breakpoints(long double a, long double b, int levels) {
  const long double len = b - a;
  std::vector<long double> bp{a, b};
  for (int k = 1; k <= levels; ++k) {
    const long double off = std::ldexp(len, -k);
    if (k > 1) {  // k == 1 is the midpoint, added once below
      const long double lo = a + off;
      const long double hi = b - off;
      if (lo > a) bp.push_back(lo);
      if (hi < b) bp.push_back(hi);
    }
  }
  bp.push_back(a + 0.5L * len);
  std::sort(bp.begin(), bp.end());
  bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
  return bp;
}

}  // namespace mrey::quad
