#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "spiral/operators.hpp"

namespace spiral {

/// An ADMM problem in the M = Id form: minimize f(x) + g(z) s.t. x = z.
/// x_update and z_update return the minimizers of the two augmented
/// Lagrangian subproblems for penalty c; d2_prox is the prox of c * g*
/// (the multiplier shadow map), needed to propagate dual candidates back
/// to the primal variables.
struct AdmmProblem {
  std::function<Vec(const Vec& z, const Vec& lambda, double c)> x_update;
  std::function<Vec(const Vec& x, const Vec& lambda, double c)> z_update;
  std::function<double(const Vec& x)> objective;
  std::shared_ptr<const ProxOracle> d2_prox;
  int n = 0;
  double c = 1.0;
};

struct AdmmState {
  Vec x, z, lambda;
  long k = 0;
};

AdmmState zero_admm_state(int n);

/// One pass: x_{k+1} from (z_k, lambda_k), z_{k+1} from (x_{k+1}, lambda_k),
/// lambda_{k+1} = lambda_k + c (x_{k+1} - z_{k+1}).
AdmmState admm_step(const AdmmProblem& prob, const AdmmState& s);

/// The governing dual point and its two reflected-resolvent images,
/// reconstructed from primal quantities:
///   y   = lambda_k + c z_k
///   r2  = lambda_k - c z_k                     (R_{c d2} y)
///   r12 = lambda_k - c z_k + 2 c x_{k+1}       (R_{c d1} R_{c d2} y)
/// x_next must be the (k+1) x-update paired with state k.
struct DualReconstruction {
  Vec y, r2, r12;
};

DualReconstruction reconstruct_dual(const AdmmState& s, const Vec& x_next,
                                    double c);

/// lt accelerator on a window of three successive dual points
/// (w.x, w.x_plus, w.x_plus_plus) = (y_k, y_{k+1}, y_{k+2}).
/// nullopt = colinear (or converged) window; the caller proceeds with the
/// regular update.
std::optional<Vec> lt_dual_step(const IterateWindow& w,
                                double eps_col = kColinearEps,
                                double tol_fix = kFixedPointTol);

/// ct accelerator: circumcenter of (y, r2, r12), the reflected-proximal
/// generalization of CRM. nullopt = colinear triple.
std::optional<Vec> ct_dual_step(const Vec& y, const Vec& r2, const Vec& r12,
                                double eps_col = kColinearEps);

enum class AccelReason { objective_improved, colinear_skip, rejected };

struct AccelDecision {
  double candidate_objective = 0.0;
  double regular_objective = 0.0;
  bool accepted = false;
  AccelReason reason = AccelReason::rejected;
};

struct AccelOutcome {
  AccelDecision decision;
  AdmmState state;  // (lambda, z) replaced by the winner's pair
  Vec x_next;       // the winner's next x-update, already computed
};

/// Objective-check acceptance of a dual candidate. The candidate multiplier
/// is d2_prox(candidate_y), the propagated second block is
/// (candidate_y - lambda) / c, and the resulting next x is compared against
/// the regular next x by objective value; ties accept the candidate.
/// x_regular_hint, when given, must equal x_update(s.z, s.lambda, c).
AccelOutcome accel_accept(const AdmmProblem& prob, const AdmmState& s,
                          const Vec& candidate_y,
                          const Vec* x_regular_hint = nullptr);

}  // namespace spiral
