#include "spiral/set_oracles.hpp"

#include <cmath>

namespace spiral {

Vec shrinkage(const Vec& v, double kappa) {
  if (kappa < 0.0) throw std::invalid_argument("shrinkage: kappa must be >= 0");
  Vec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double m = std::abs(v[i]) - kappa;
    out[i] = m > 0.0 ? (v[i] > 0.0 ? m : -m) : 0.0;
  }
  return out;
}

Hyperplane::Hyperplane(Vec normal, double offset)
    : normal_(std::move(normal)), offset_(offset) {
  const double nn = normal_.squaredNorm();
  if (nn == 0.0 || !all_finite(normal_))
    throw std::invalid_argument("Hyperplane: normal must be nonzero and finite");
  inv_nn_ = 1.0 / nn;
}

Vec Hyperplane::project(const Vec& p) const {
  check_dim(p, "Hyperplane::project");
  return p - (normal_.dot(p) - offset_) * inv_nn_ * normal_;
}

LineAtAngle::LineAtAngle(double theta) : theta_(theta), dir_(2) {
  dir_ << std::cos(theta), std::sin(theta);
}

Vec LineAtAngle::project(const Vec& p) const {
  check_dim(p, "LineAtAngle::project");
  return dir_.dot(p) * dir_;
}

AffineSystem::AffineSystem(Mat A, Vec b) : A_(std::move(A)), b_(std::move(b)) {
  if (A_.rows() == 0 || A_.cols() < A_.rows())
    throw std::invalid_argument("AffineSystem: need 1 <= nu <= n rows");
  if (b_.size() != A_.rows())
    throw DimensionMismatch("AffineSystem: b length must match rows of A");
  llt_.compute(A_ * A_.transpose());
  bool ok = llt_.info() == Eigen::Success;
  if (ok) {
    // Cholesky can succeed numerically on a nearly singular A A^T; reject
    // those too, since every projection would amplify the error.
    const Vec d = llt_.matrixL().toDenseMatrix().diagonal();
    ok = d.minCoeff() > 1e-10 * d.maxCoeff();
  }
  if (!ok) throw std::invalid_argument("AffineSystem: A must have full row rank");
  x0_ = A_.transpose() * llt_.solve(b_);
}

Vec AffineSystem::project(const Vec& v) const {
  check_dim(v, "AffineSystem::project");
  return v - A_.transpose() * llt_.solve(A_ * v - b_);
}

Vec AffineSystem::project_rowspace(const Vec& v) const {
  check_dim(v, "AffineSystem::project_rowspace");
  return A_.transpose() * llt_.solve(A_ * v);
}

Sphere::Sphere(Vec center, double radius)
    : center_(std::move(center)), radius_(radius) {
  if (!(radius_ > 0.0)) throw std::invalid_argument("Sphere: radius must be > 0");
}

Vec Sphere::project(const Vec& p) const {
  check_dim(p, "Sphere::project");
  const Vec d = p - center_;
  const double n = d.stableNorm();
  if (n == 0.0) {
    Vec out = center_;
    out[0] += radius_;  // selector for the ambiguous center case
    return out;
  }
  return center_ + (radius_ / n) * d;
}

InfBall::InfBall(double radius) : radius_(radius) {
  if (!(radius_ > 0.0)) throw std::invalid_argument("InfBall: radius must be > 0");
}

Vec InfBall::project(const Vec& p) const {
  return p.cwiseMax(-radius_).cwiseMin(radius_);
}

FunctionGraph::FunctionGraph(Fn f, Fn f_prime, double lo, double hi,
                             int scan_points)
    : f_(std::move(f)), fp_(std::move(f_prime)), lo_(lo), hi_(hi),
      scan_points_(scan_points) {
  if (!(lo_ < hi_)) throw std::invalid_argument("FunctionGraph: need lo < hi");
  if (scan_points_ < 3)
    throw std::invalid_argument("FunctionGraph: need at least 3 scan points");
}

Vec FunctionGraph::project(const Vec& p) const {
  check_dim(p, "FunctionGraph::project");
  const double vx = p[0], vy = p[1];
  const auto dist2 = [&](double y) {
    const double dy = y - vx, dfy = f_(y) - vy;
    return dy * dy + dfy * dfy;
  };
  // Half the derivative of dist2; its zeros are the stationary points.
  const auto stat = [&](double y) {
    return (y - vx) + (f_(y) - vy) * fp_(y);
  };

  // Coarse scan. Ties resolve to the leftmost gridpoint.
  const double step = (hi_ - lo_) / (scan_points_ - 1);
  int best = 0;
  double best_val = dist2(lo_);
  for (int i = 1; i < scan_points_; ++i) {
    const double v = dist2(lo_ + i * step);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  double a = lo_ + (best > 0 ? (best - 1) : 0) * step;
  double b = lo_ + (best < scan_points_ - 1 ? (best + 1) : best) * step;

  // Golden-section shrink of [a, b].
  constexpr double invphi = 0.6180339887498949;
  double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
  double f1 = dist2(x1), f2 = dist2(x2);
  for (int it = 0; it < 80 && (b - a) > 1e-12 * (1.0 + std::abs(a)); ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = dist2(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = dist2(x2);
    }
  }
  const double y_golden = 0.5 * (a + b);
  double y = y_golden;

  // Secant polish on the stationarity equation, safeguarded to the bracket.
  // Golden section alone localizes a smooth minimum only to ~sqrt(eps):
  // below that, dist2 comparisons are rounding noise. The polish recovers
  // stationarity to machine precision.
  double y_prev = y + 1e-7 * (1.0 + std::abs(y));
  double g = stat(y), g_prev = stat(y_prev);
  for (int it = 0; it < 12 && g != g_prev; ++it) {
    const double y_next = y - g * (y - y_prev) / (g - g_prev);
    if (!std::isfinite(y_next) || y_next < lo_ || y_next > hi_) break;
    y_prev = y;
    g_prev = g;
    y = y_next;
    g = stat(y);
    if (g == 0.0) break;
  }
  // Keep the polish when it stayed in the same basin and improved the
  // stationarity residual; a jump out of the basin must win on distance.
  const double basin = 1e-6 * (1.0 + std::abs(y_golden));
  const bool in_basin = std::abs(y - y_golden) <= basin;
  if (in_basin) {
    if (std::abs(stat(y)) > std::abs(stat(y_golden))) y = y_golden;
  } else if (dist2(y) >= dist2(y_golden)) {
    y = y_golden;
  }

  Vec out(2);
  out << y, f_(y);
  return out;
}

L1Prox::L1Prox(double kappa) : kappa_(kappa) {
  if (kappa_ < 0.0) throw std::invalid_argument("L1Prox: kappa must be >= 0");
}

}  // namespace spiral
