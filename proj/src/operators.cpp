#include "spiral/operators.hpp"

namespace spiral {

std::string to_string(StepBranch b) {
  switch (b) {
    case StepBranch::start: return "start";
    case StepBranch::plain: return "step";
    case StepBranch::circumcenter: return "circumcenter";
    case StepBranch::colinear_fallback: return "colinear_fallback";
    case StepBranch::fixed_point_detected: return "fixed_point_detected";
  }
  return "?";
}

Vec dr_apply(const ProxOracle& a, const ProxOracle& b, const Vec& p) {
  return 0.5 * (b.reflected(a.reflected(p)) + p);
}

StepOutcome crm_apply(const SetOracle& a, const SetOracle& b, const Vec& p,
                      double eps_col, double tol_fix) {
  const Vec ra = a.reflect(p);
  const Vec rba = b.reflect(ra);

  const auto guard = colinearity_test(p, ra, rba, eps_col);
  if (guard.is_colinear) {
    Vec dr = 0.5 * (rba + p);
    // Double reflection back at p with R_a p distinct: p is already a DR
    // fixed point, so project(a, p) solves the feasibility problem.
    const bool back_at_p = (rba - p).norm() <= tol_fix * (1.0 + p.norm());
    const bool ra_moved = (ra - p).norm() > tol_fix * (1.0 + p.norm());
    return {std::move(dr), back_at_p && ra_moved
                               ? StepBranch::fixed_point_detected
                               : StepBranch::colinear_fallback};
  }

  auto c = circumcenter(p, ra, rba, eps_col);
  if (!c) return {0.5 * (rba + p), StepBranch::colinear_fallback};
  return {std::move(*c), StepBranch::circumcenter};
}

std::optional<Vec> lt_anchor(const IterateWindow& w, double tol_fix) {
  require_same_dim(w.x, w.x_plus, "lt_anchor");
  require_same_dim(w.x, w.x_plus_plus, "lt_anchor");

  const Vec d2 = w.x_plus_plus - w.x_plus;
  const double n2 = d2.squaredNorm();
  if (d2.norm() <= tol_fix * (1.0 + w.x_plus.norm())) return std::nullopt;

  const Vec d1 = w.x_plus - w.x;
  return Vec(2.0 * d2 + (2.0 * d1.dot(d2) / n2) * d2 + w.x);
}

std::optional<Vec> lt_center(const IterateWindow& w, double eps_col,
                             double tol_fix) {
  const auto anchor = lt_anchor(w, tol_fix);
  if (!anchor) return std::nullopt;

  const Vec doubled = 2.0 * w.x_plus - w.x;
  if (colinearity_test(w.x, doubled, *anchor, eps_col).is_colinear)
    return std::nullopt;
  return circumcenter(w.x, doubled, *anchor, eps_col);
}

StepOutcome lt_apply(const OperatorFn& T, const Vec& p, double eps_col,
                     double tol_fix) {
  IterateWindow w;
  w.x = p;
  w.x_plus = T(p);
  w.x_plus_plus = T(w.x_plus);

  auto c = lt_center(w, eps_col, tol_fix);
  if (!c) return {std::move(w.x_plus), StepBranch::colinear_fallback};
  return {std::move(*c), StepBranch::circumcenter};
}

StopRule step_norm_stop(double tol) {
  return [tol](const Vec& prev, const Vec& next) {
    return (next - prev).norm() <= tol;
  };
}

Trajectory iterate(const SteppingFn& T, const Vec& p0, int max_iter,
                   const StopRule& stop) {
  if (max_iter < 1) throw std::invalid_argument("iterate: max_iter must be >= 1");
  if (!all_finite(p0)) throw NonFiniteError("iterate: start point not finite");

  Trajectory traj;
  traj.points.push_back(p0);
  traj.branches.push_back(StepBranch::start);

  for (int k = 0; k < max_iter; ++k) {
    StepOutcome s = T(traj.points.back());
    if (!all_finite(s.point))
      throw NonFiniteError("iterate: iterate left the finite range at step " +
                           std::to_string(k + 1));
    if (stop(traj.points.back(), s.point)) {
      traj.status = StopStatus::converged;
      return traj;
    }
    traj.points.push_back(std::move(s.point));
    traj.branches.push_back(s.branch);
  }
  traj.status = StopStatus::cap_exceeded;
  return traj;
}

SteppingFn dr_stepper(const SetOracle& a, const SetOracle& b) {
  return [&a, &b](const Vec& p) {
    return StepOutcome{dr_apply(a, b, p), StepBranch::plain};
  };
}

SteppingFn crm_stepper(const SetOracle& a, const SetOracle& b, double eps_col) {
  return [&a, &b, eps_col](const Vec& p) { return crm_apply(a, b, p, eps_col); };
}

SteppingFn lt_stepper(OperatorFn T, double eps_col, double tol_fix) {
  return [T = std::move(T), eps_col, tol_fix](const Vec& p) {
    return lt_apply(T, p, eps_col, tol_fix);
  };
}

}  // namespace spiral
