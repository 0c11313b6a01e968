#include "spiral/admm.hpp"

#include <cassert>

namespace spiral {

AdmmState zero_admm_state(int n) {
  AdmmState s;
  s.x = Vec::Zero(n);
  s.z = Vec::Zero(n);
  s.lambda = Vec::Zero(n);
  s.k = 0;
  return s;
}

AdmmState admm_step(const AdmmProblem& prob, const AdmmState& s) {
  AdmmState next;
  next.x = prob.x_update(s.z, s.lambda, prob.c);
  next.z = prob.z_update(next.x, s.lambda, prob.c);
  next.lambda = s.lambda + prob.c * (next.x - next.z);
  next.k = s.k + 1;
  if (!all_finite(next.x) || !all_finite(next.z) || !all_finite(next.lambda))
    throw NonFiniteError("admm_step: state left the finite range");
  return next;
}

DualReconstruction reconstruct_dual(const AdmmState& s, const Vec& x_next,
                                    double c) {
  require_same_dim(s.lambda, s.z, "reconstruct_dual");
  require_same_dim(s.lambda, x_next, "reconstruct_dual");
  DualReconstruction d;
  d.y = s.lambda + c * s.z;
  d.r2 = s.lambda - c * s.z;
  d.r12 = d.r2 + 2.0 * c * x_next;
  return d;
}

std::optional<Vec> lt_dual_step(const IterateWindow& w, double eps_col,
                                double tol_fix) {
  return lt_center(w, eps_col, tol_fix);
}

std::optional<Vec> ct_dual_step(const Vec& y, const Vec& r2, const Vec& r12,
                                double eps_col) {
  if (colinearity_test(y, r2, r12, eps_col).is_colinear) return std::nullopt;
  return circumcenter(y, r2, r12, eps_col);
}

AccelOutcome accel_accept(const AdmmProblem& prob, const AdmmState& s,
                          const Vec& candidate_y, const Vec* x_regular_hint) {
  const Vec lambda_cand = prob.d2_prox->prox(candidate_y);
  const Vec z_cand = (candidate_y - lambda_cand) / prob.c;
  const Vec x_cand = prob.x_update(z_cand, lambda_cand, prob.c);
  const Vec x_regular =
      x_regular_hint ? *x_regular_hint : prob.x_update(s.z, s.lambda, prob.c);

  AccelOutcome out;
  out.decision.candidate_objective = prob.objective(x_cand);
  out.decision.regular_objective = prob.objective(x_regular);
  out.decision.accepted =
      out.decision.candidate_objective <= out.decision.regular_objective;
  out.decision.reason = out.decision.accepted ? AccelReason::objective_improved
                                              : AccelReason::rejected;

  if (out.decision.accepted) {
    assert(out.decision.candidate_objective <= out.decision.regular_objective);
    out.state = s;
    out.state.lambda = lambda_cand;
    out.state.z = z_cand;
    out.x_next = x_cand;
  } else {
    out.state = s;
    out.x_next = x_regular;
  }
  return out;
}

}  // namespace spiral
