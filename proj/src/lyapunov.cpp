#include "spiral/lyapunov.hpp"

#include <cmath>
#include <numbers>

namespace spiral {

namespace {

double orthogonality_residual(const Vec& g, const Vec& u) {
  return std::abs(g.dot(u)) / ((1.0 + g.norm()) * (1.0 + u.norm()));
}

}  // namespace

Vec GraphLyapunov::grad_v(const Vec& p) const {
  if (p.size() != 2)
    throw DimensionMismatch("GraphLyapunov::grad_v: expects points of R^2");
  const double y = p[0], rho = p[1];
  if (y < lo || y > hi)
    throw std::domain_error("GraphLyapunov::grad_v: y outside domain");

  const double fp = f_prime(y);
  Vec g(2);
  if (fp == 0.0) {
    if (f(y) != 0.0)
      throw SingularGradient("grad_v: f'(y) = 0 with f(y) != 0");
    g << 0.0, rho;
    return g;
  }
  g << f(y) / fp, rho;
  return g;
}

CheckReport check_spiraling(const GraphLyapunov& L, const SetOracle& a,
                            const SetOracle& b, const Vec& p, double tol) {
  const Vec tp = dr_apply(a, b, p);
  const Vec g = L.grad_v(tp);
  CheckReport r;
  r.tolerance = tol;
  r.residual = orthogonality_residual(g, p - tp);
  r.passed = r.residual <= tol;
  return r;
}

CheckReport check_bisector_theorem(const GraphLyapunov& L, const SetOracle& a,
                                   const SetOracle& b, const Vec& p,
                                   BisectorCase which, double tol) {
  Vec q, other;  // other = the far endpoint of the bisected segment
  switch (which) {
    case BisectorCase::T_AB:
      other = b.reflect(a.reflect(p));
      q = 0.5 * (other + p);
      break;
    case BisectorCase::P_A:
      other = a.reflect(p);
      q = a.project(p);
      break;
    case BisectorCase::P_B:
      other = b.reflect(p);
      q = b.project(p);
      break;
    case BisectorCase::T_BA:
      other = a.reflect(b.reflect(p));
      q = 0.5 * (other + p);
      break;
  }

  const Vec g = L.grad_v(q);
  double res = orthogonality_residual(g, p - other);
  if (p != other) res = std::max(res, Bisector(p, other).residual(q));

  CheckReport r;
  r.tolerance = tol;
  r.residual = res;
  r.passed = res <= tol;
  return r;
}

CheckReport check_mss_parallelism(const GraphLyapunov& L,
                                  const std::array<Vec, 3>& triple,
                                  const Vec& candidate_center, const Vec& probe,
                                  double tol) {
  const Vec g = 2.0 * (probe - candidate_center);
  const double gn2 = g.squaredNorm();
  if (g.norm() <= 1e-15 * (1.0 + probe.norm()))
    throw DegenerateGradient("check_mss_parallelism: probe equals the center");

  const Vec w = project_affine_hull(L.grad_v(probe),
                                    {triple[0], triple[1], triple[2]});
  const Vec rejection = w - (w.dot(g) / gn2) * g;

  CheckReport r;
  r.tolerance = tol;
  r.residual = rejection.norm() / (1.0 + w.norm());
  r.passed = r.residual <= tol;
  return r;
}

NewtonEquivalence newton_equivalence(const GraphLyapunov& L, double y) {
  const double fp = L.f_prime(y);
  if (fp == 0.0) throw SingularGradient("newton_equivalence: f'(y) = 0");

  NewtonEquivalence out;
  out.newton_step = y - L.f(y) / fp;

  Vec x(2);
  x << y, 0.0;
  out.gradient_step = x - L.grad_v(x);
  out.residual = std::abs(out.newton_step - out.gradient_step[0]) +
                 std::abs(out.gradient_step[1]);
  return out;
}

GraphProblem make_two_lines_problem(double theta) {
  if (!(std::abs(theta) < std::numbers::pi / 2))
    throw std::invalid_argument("two-lines: |theta| must be < pi/2");
  const double slope = std::tan(theta);

  GraphProblem prob;
  prob.lyap.f = [slope](double y) { return slope * y; };
  prob.lyap.f_prime = [slope](double) { return slope; };
  prob.lyap.lo = -1e9;
  prob.lyap.hi = 1e9;

  Vec up(2);
  up << 0.0, 1.0;
  prob.A = std::make_shared<Hyperplane>(up, 0.0);
  prob.B = std::make_shared<LineAtAngle>(theta);
  return prob;
}

GraphProblem make_exp_graph_problem(double bracket) {
  GraphProblem prob;
  prob.lyap.f = [](double y) { return std::expm1(y); };
  prob.lyap.f_prime = [](double y) { return std::exp(y); };
  prob.lyap.lo = -bracket;
  prob.lyap.hi = bracket;

  Vec up(2);
  up << 0.0, 1.0;
  prob.A = std::make_shared<Hyperplane>(up, 0.0);
  prob.B = std::make_shared<FunctionGraph>(
      [](double y) { return std::expm1(y); },
      [](double y) { return std::exp(y); }, -bracket, bracket);
  return prob;
}

}  // namespace spiral
