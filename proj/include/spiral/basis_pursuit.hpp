#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "spiral/admm.hpp"

namespace spiral {

/// minimize |x|_1 subject to A x = b, with nu < n and A of full row rank.
/// The constraint set S = {x | A x = b} carries the cached factorization
/// reused by every ADMM pass.
struct BasisPursuitInstance {
  std::shared_ptr<const AffineSystem> S;
  double c = 1.0;

  int n() const { return S->dim(); }
  int nu() const { return S->rows(); }
  const Mat& A() const { return S->A(); }
  const Vec& b() const { return S->b(); }
};

BasisPursuitInstance make_bp_instance(Mat A, Vec b, double c);

/// Deterministic random instance: A has i.i.d. standard normal entries
/// (row-major fill order), x_true has nu nonzero standard normal entries at
/// distinct positions drawn from the same stream, b = A x_true.
BasisPursuitInstance random_bp_instance(int n, int nu, double c, uint64_t seed);

/// The ADMM formulation: x-update projects onto S, z-update is soft
/// thresholding at 1/c, d2_prox is the projection onto the unit inf-ball.
AdmmProblem bp_admm_problem(const BasisPursuitInstance& inst);

enum class Accel { none, lt, ct };

std::string to_string(Accel a);
std::optional<Accel> accel_from_string(std::string_view s);

struct BpSolveOptions {
  Accel accel = Accel::none;
  long max_iter = 1'000'000;
  double tol = 1e-8;
  /// Passes between acceleration attempts (the dual window length).
  int accel_cadence = 3;
  /// Optional per-pass hook, called with the state after each pass.
  std::function<void(const AdmmState&)> on_pass;
  /// Optional hook called after each acceleration decision.
  std::function<void(long pass, const AccelDecision&)> on_accel;
};

struct BpSolveResult {
  long iterations = 0;  // passes through the three ADMM updates
  Vec x;
  double objective = 0.0;
  bool solved = false;  // false = iteration cap exceeded
  long accel_attempts = 0;
  long accel_accepted = 0;
  long accel_colinear_skips = 0;
  long objective_evals = 0;  // objective calls spent on acceptance checks
};

/// Runs ADMM with the stop rule
///   |z_k - x_k|     < tol (sqrt(n) + max(|x_k|, |z_k|))   and
///   |z_k - z_{k-1}| < tol (sqrt(n) + |lambda_k|),
/// attempting a dual acceleration every accel_cadence passes when requested.
/// An accepted candidate installs (lambda, z) from the dual shadow and seeds
/// the next pass's x-update; the dual window restarts either way.
BpSolveResult bp_solve(const BasisPursuitInstance& inst,
                       const BpSolveOptions& opts);

}  // namespace spiral
