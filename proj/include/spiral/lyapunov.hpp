#pragma once

#include <array>
#include <memory>

#include "spiral/operators.hpp"

namespace spiral {

/// Lyapunov data for the feasibility pair A = X x {0}, B = gra f in R^2,
/// restricted to differentiable f. The function V(y, rho) = F(y) + rho^2 / 2
/// itself is never materialized; everything is driven by its gradient
///   grad V(y, rho) = (f(y) / f'(y), rho),
/// with grad V = (0, rho) at points where f and f' both vanish.
struct GraphLyapunov {
  std::function<double(double)> f;
  std::function<double(double)> f_prime;
  double lo = -1.0;  // domain D on which F' = f/f' is monotone increasing
  double hi = 1.0;

  /// Throws SingularGradient when f'(y) = 0 with f(y) != 0 (the construction's
  /// hypothesis fails there), and std::domain_error outside [lo, hi] x R.
  Vec grad_v(const Vec& p) const;
};

/// Result of one numerical theorem check: the magnitude of the quantity the
/// statement asserts to vanish, already normalized to be scale-free.
struct CheckReport {
  double residual = 0.0;
  bool passed = false;
  double tolerance = 0.0;
};

/// Tangency of each step to the Lyapunov level set at its destination:
/// residual = |<grad V(Tp), p - Tp>| / ((1 + |grad V(Tp)|) (1 + |p - Tp|))
/// with T the DR operator for (a, b).
CheckReport check_spiraling(const GraphLyapunov& L, const SetOracle& a,
                            const SetOracle& b, const Vec& p, double tol);

enum class BisectorCase { T_AB, P_A, P_B, T_BA };

/// Gradient/bisector relations at the four marked points of the reflection
/// triangles: the Lyapunov gradient at q is orthogonal to u and q lies on the
/// perpendicular bisector of the corresponding triangle side, where
///   T_AB: q = T_{A,B} p, u = p - R_B R_A p
///   P_A : q = P_A p,     u = p - R_A p
///   P_B : q = P_B p,     u = p - R_B p
///   T_BA: q = T_{B,A} p, u = p - R_A R_B p.
/// The report's residual is the larger of the two normalized residuals.
CheckReport check_bisector_theorem(const GraphLyapunov& L, const SetOracle& a,
                                   const SetOracle& b, const Vec& p,
                                   BisectorCase which, double tol);

/// Surrogate parallelism: the projection of grad V(probe) onto the direction
/// subspace of aff(triple) must be parallel to the gradient of
/// Q = d(., candidate_center)^2 at the probe. The residual is the normalized
/// rejection norm. Throws DegenerateGradient when probe == candidate_center.
CheckReport check_mss_parallelism(const GraphLyapunov& L,
                                  const std::array<Vec, 3>& triple,
                                  const Vec& candidate_center, const Vec& probe,
                                  double tol);

struct NewtonEquivalence {
  double newton_step = 0.0;
  Vec gradient_step;
  double residual = 0.0;  // algebraically exact: zero up to round-off
};

/// Newton-Raphson on f as a unit gradient-descent step on V along A:
/// newton_step = y - f(y)/f'(y) versus (y, 0) - grad V(y, 0).
NewtonEquivalence newton_equivalence(const GraphLyapunov& L, double y);

/// A named feasibility instance with its Lyapunov data: A is the horizontal
/// axis of R^2 and B the graph set.
struct GraphProblem {
  GraphLyapunov lyap;
  std::shared_ptr<const SetOracle> A;
  std::shared_ptr<const SetOracle> B;
};

/// Two lines through the origin: B at angle theta (slope tan theta), A the
/// horizontal axis. Requires |theta| < pi/2.
GraphProblem make_two_lines_problem(double theta);

/// B = gra(exp(y) - 1), A the horizontal axis; intersection at the origin.
GraphProblem make_exp_graph_problem(double bracket = 10.0);

}  // namespace spiral
