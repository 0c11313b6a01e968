#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spiral/geometry.hpp"
#include "spiral/set_oracles.hpp"

namespace spiral {

enum class StepBranch {
  start,                 // trajectory seed, not produced by the operator
  plain,                 // ordinary operator application (no branching)
  circumcenter,          // colinearity guard passed, circumcenter taken
  colinear_fallback,     // guard fired, definition's fallback value taken
  fixed_point_detected,  // double reflection returned to the input point
};

std::string to_string(StepBranch b);

struct StepOutcome {
  Vec point;
  StepBranch branch;
};

/// One Douglas-Rachford step (1/2) R_b R_a + (1/2) Id, with reflections
/// generalized to reflected resolvents 2 prox - Id for prox oracles.
Vec dr_apply(const ProxOracle& a, const ProxOracle& b, const Vec& p);

/// Generalized circumcentered-reflections step for the pair (a, b):
/// circumcenter of (p, R_a p, R_b R_a p) when the triple is not colinear,
/// the DR step otherwise. When the double reflection returns to p while
/// R_a p differs, the outcome is flagged fixed_point_detected so the caller
/// can recover a feasible point from project(a, p).
StepOutcome crm_apply(const SetOracle& a, const SetOracle& b, const Vec& p,
                      double eps_col = kColinearEps,
                      double tol_fix = kFixedPointTol);

/// Two successive images (x, Tx, TTx) of one operator.
struct IterateWindow {
  Vec x, x_plus, x_plus_plus;
};

/// Anchor point for the second perpendicular bisector of the lt step,
/// built only from iterate differences:
///   2 (x++ - x+) + 2 proj_{span(x++ - x+)} (x+ - x) + x.
/// Returns nullopt when |x++ - x+| <= tol_fix * (1 + |x+|): the window has
/// already reached a fixed point and the span is undefined.
std::optional<Vec> lt_anchor(const IterateWindow& w,
                             double tol_fix = kFixedPointTol);

/// Core geometry of the lt step on a window: circumcenter of
/// (x, 2 x+ - x, anchor). nullopt when the anchor is undefined or the triple
/// is colinear; the caller then falls back to x+.
std::optional<Vec> lt_center(const IterateWindow& w,
                             double eps_col = kColinearEps,
                             double tol_fix = kFixedPointTol);

using OperatorFn = std::function<Vec(const Vec&)>;

/// One lt step for a generic operator handle: computes x+ = Tp and
/// x++ = Tx+ internally, then takes the circumcenter branch when defined
/// and x+ otherwise.
StepOutcome lt_apply(const OperatorFn& T, const Vec& p,
                     double eps_col = kColinearEps,
                     double tol_fix = kFixedPointTol);

using SteppingFn = std::function<StepOutcome(const Vec&)>;
using StopRule = std::function<bool(const Vec& prev, const Vec& next)>;

enum class StopStatus { converged, cap_exceeded };

/// Orbit of a stepping operator. points[0] is the start; the point that
/// triggered the stop rule is not appended (it coincides with the last
/// recorded iterate up to the rule's tolerance).
struct Trajectory {
  std::vector<Vec> points;
  std::vector<StepBranch> branches;  // branches[k] produced points[k]
  StopStatus status = StopStatus::cap_exceeded;
};

StopRule step_norm_stop(double tol);

Trajectory iterate(const SteppingFn& T, const Vec& p0, int max_iter,
                   const StopRule& stop);

// Stepping adapters for the three methods.
SteppingFn dr_stepper(const SetOracle& a, const SetOracle& b);
SteppingFn crm_stepper(const SetOracle& a, const SetOracle& b,
                       double eps_col = kColinearEps);
SteppingFn lt_stepper(OperatorFn T, double eps_col = kColinearEps,
                      double tol_fix = kFixedPointTol);

}  // namespace spiral
