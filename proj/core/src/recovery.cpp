#include "mrey/recovery.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "mrey/errors.hpp"

namespace mrey {

namespace {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

struct Model {
  std::span<const TableEntry> table;
  double q1_unit;  // hbar^2 alpha^2 / (2 mu)
  double q2;

  // Residuals and Jacobian at theta = (x1, x2, x3); false when some l in the
  // table has a non-positive radicand.
  bool eval(const Vec3& theta, Eigen::VectorXd& r, Eigen::MatrixXd* jac) const {
    const auto m = static_cast<Eigen::Index>(table.size());
    r.resize(m);
    if (jac) jac->resize(m, 3);
    for (Eigen::Index i = 0; i < m; ++i) {
      const TableEntry& t = table[static_cast<std::size_t>(i)];
      const double ll = centrifugal(t.l);
      const double radicand = 1.0 + 4.0 * ll - 4.0 * theta[0] - 4.0 * theta[1];
      if (!(radicand > 0.0)) return false;
      const double root = std::sqrt(radicand);
      const double rho = t.n + 0.5 + 0.5 * root;
      const double q3 = theta[1] - theta[2] + ll;
      const double g = rho + q3 / rho;
      r[i] = q1_unit * ll - q2 * g * g - t.energy;
      if (jac) {
        const double dg_drho = 1.0 - q3 / (rho * rho);
        const double drho_dx = -1.0 / root;
        (*jac)(i, 0) = -2.0 * q2 * g * (dg_drho * drho_dx);
        (*jac)(i, 1) = -2.0 * q2 * g * (dg_drho * drho_dx + 1.0 / rho);
        (*jac)(i, 2) = -2.0 * q2 * g * (-1.0 / rho);
      }
    }
    return true;
  }
};

struct Fit {
  Vec3 theta = Vec3::Zero();
  double cost = std::numeric_limits<double>::infinity();
  int iterations = 0;
  bool converged = false;
};

Fit levenberg_marquardt(const Model& model, Vec3 theta) {
  Fit fit;
  Eigen::VectorXd r;
  Eigen::MatrixXd jac;
  if (!model.eval(theta, r, &jac)) return fit;
  double cost = r.squaredNorm();
  double damping = 1e-3;

  for (int it = 0; it < 500; ++it) {
    fit.iterations = it + 1;
    const Mat3 jtj = jac.transpose() * jac;
    const Vec3 grad = jac.transpose() * r;
    if (grad.lpNorm<Eigen::Infinity>() < 1e-15 * std::max(1.0, cost)) {
      fit.converged = true;
      break;
    }
    bool accepted = false;
    for (int tries = 0; tries < 40; ++tries) {
      Mat3 a = jtj;
      for (int d = 0; d < 3; ++d) a(d, d) += damping * std::max(jtj(d, d), 1e-12);
      const Vec3 step = a.ldlt().solve(-grad);
      const Vec3 trial = theta + step;
      Eigen::VectorXd r_trial;
      if (model.eval(trial, r_trial, nullptr)) {
        const double trial_cost = r_trial.squaredNorm();
        if (trial_cost < cost) {
          const double gain = cost - trial_cost;
          theta = trial;
          model.eval(theta, r, &jac);
          damping = std::max(damping / 3.0, 1e-12);
          accepted = true;
          if (gain <= 1e-15 * cost || step.norm() <= 1e-13 * (1.0 + theta.norm())) {
            fit.converged = true;
          }
          cost = trial_cost;
          break;
        }
      }
      damping *= 4.0;
    }
    if (!accepted) {
      fit.converged = true;  // no descent direction left at this damping range
      break;
    }
    if (fit.converged) break;
  }
  fit.theta = theta;
  fit.cost = cost;
  return fit;
}

}  // namespace

std::vector<BoundViolation> bound_violations(std::span<const TableEntry> table, double alpha,
                                             const PhysicalConstants& consts) {
  const double unit = consts.hbar * consts.hbar * alpha * alpha / (2.0 * consts.mu);
  std::vector<BoundViolation> out;
  for (const TableEntry& t : table) {
    const double q1 = unit * centrifugal(t.l);
    const double excess = t.energy - q1;
    if (excess > 1e-12 * std::max(1.0, std::fabs(q1))) out.push_back({t, q1, excess});
  }
  return out;
}

RecoveryResult recover_params(std::span<const TableEntry> table, double alpha,
                              const PhysicalConstants& consts) {
  if (table.empty()) throw domain_error("recover_params needs at least one table row");
  if (!(alpha > 0.0)) throw domain_error("alpha must be > 0");
  consts.validate();
  for (const TableEntry& t : table) {
    if (t.n < 0 || t.l < 0 || !std::isfinite(t.energy)) {
      throw domain_error("table rows need n, l >= 0 and a finite energy");
    }
  }

  const double h2a2 = consts.hbar * consts.hbar * alpha * alpha;
  const Model model{table, h2a2 / (2.0 * consts.mu), h2a2 / (8.0 * consts.mu)};

  Fit best;
  // Starts keep x1 + x2 < 1/4 so the l = 0 radicand is positive.
  for (double x1 : {-2.0, 0.0, 0.05}) {
    for (double x2 : {-2.0, 0.0, 0.05}) {
      for (double x3 : {-4.0, 0.0, 4.0, 16.0, 64.0}) {
        const Fit f = levenberg_marquardt(model, Vec3(x1, x2, x3));
        if (f.cost < best.cost) best = f;
      }
    }
  }
  if (!std::isfinite(best.cost)) throw numerical_error("no feasible starting point for the fit");

  RecoveryResult res;
  res.fitted.alpha = alpha;
  res.fitted.a1 = best.theta[0] * h2a2 / (2.0 * consts.mu);
  res.fitted.a2 = best.theta[1] * h2a2 / (2.0 * consts.mu);
  res.fitted.a3 = best.theta[2] * consts.hbar * consts.hbar * alpha / (2.0 * consts.mu);
  res.iterations = best.iterations;
  res.converged = best.converged;

  Eigen::VectorXd r;
  model.eval(best.theta, r, nullptr);
  res.residuals.assign(r.data(), r.data() + r.size());
  res.rms = std::sqrt(r.squaredNorm() / static_cast<double>(r.size()));
  res.max_abs = r.lpNorm<Eigen::Infinity>();

  res.violations = bound_violations(table, alpha, consts);
  res.feasible = res.violations.empty();
  for (const BoundViolation& v : res.violations) {
    res.irreducible_floor = std::max(res.irreducible_floor, v.excess);
  }

  char buf[256];
  if (res.feasible) {
    std::snprintf(buf, sizeof buf,
                  "feasible: every row satisfies E <= Q1; best-fit max |residual| = %.6g", res.max_abs);
  } else {
    std::snprintf(buf, sizeof buf,
                  "infeasible: %zu row(s) exceed the E <= Q1 bound; max |residual| >= %.6g "
                  "for any couplings (best fit %.6g)",
                  res.violations.size(), res.irreducible_floor, res.max_abs);
  }
  res.verdict = buf;
  return res;
}

}  // namespace mrey
