#pragma once

#include <functional>
#include <memory>

#include "spiral/types.hpp"

namespace spiral {

/// Componentwise soft thresholding: sign(v_i) * max(|v_i| - kappa, 0).
/// This is the proximity operator of kappa * |.|_1.
Vec shrinkage(const Vec& v, double kappa);

/// A proximity oracle: immutable after construction and shareable across
/// threads. reflected() is the reflected resolvent 2 prox - Id.
class ProxOracle {
 public:
  virtual ~ProxOracle() = default;

  /// Ambient dimension, or 0 when the oracle works in any dimension.
  virtual int dim() const = 0;

  virtual Vec prox(const Vec& p) const = 0;

  Vec reflected(const Vec& p) const { return 2.0 * prox(p) - p; }

 protected:
  void check_dim(const Vec& p, const char* where) const {
    if (dim() > 0 && p.size() != dim())
      throw DimensionMismatch(std::string(where) + ": point dimension " +
                              std::to_string(p.size()) + " != oracle dimension " +
                              std::to_string(dim()));
  }
};

/// A projectable set. Its prox is the projection (the prox of the set's
/// indicator function), and reflect() is the reflection 2 P - Id.
class SetOracle : public ProxOracle {
 public:
  Vec prox(const Vec& p) const final { return project(p); }

  virtual Vec project(const Vec& p) const = 0;

  Vec reflect(const Vec& p) const { return 2.0 * project(p) - p; }

  /// Normalized distance-to-set measure |p - P(p)| / (1 + |p|), used by the
  /// membership assertions in tests and by the feasibility stop in the CLI.
  double membership_residual(const Vec& p) const {
    return (p - project(p)).norm() / (1.0 + p.norm());
  }
};

/// {x | <normal, x> = offset}, normal != 0.
class Hyperplane final : public SetOracle {
 public:
  Hyperplane(Vec normal, double offset);
  int dim() const override { return static_cast<int>(normal_.size()); }
  Vec project(const Vec& p) const override;

 private:
  Vec normal_;
  double offset_;
  double inv_nn_;
};

/// Line through the origin of R^2 with direction (cos theta, sin theta).
class LineAtAngle final : public SetOracle {
 public:
  explicit LineAtAngle(double theta);
  int dim() const override { return 2; }
  Vec project(const Vec& p) const override;
  double theta() const { return theta_; }

 private:
  double theta_;
  Vec dir_;
};

/// {x | A x = b} for a full-row-rank A (nu x n, nu <= n). The Cholesky
/// factorization of A A^T is computed once at construction and reused by
/// every projection.
class AffineSystem final : public SetOracle {
 public:
  AffineSystem(Mat A, Vec b);

  int dim() const override { return static_cast<int>(A_.cols()); }
  int rows() const { return static_cast<int>(A_.rows()); }
  const Mat& A() const { return A_; }
  const Vec& b() const { return b_; }

  /// v - A^T (A A^T)^{-1} (A v - b)
  Vec project(const Vec& v) const override;

  /// Orthogonal projection onto range(A^T).
  Vec project_rowspace(const Vec& v) const;

  /// A^T (A A^T)^{-1} b, the minimum-norm solution of A x = b.
  const Vec& min_norm_solution() const { return x0_; }

 private:
  Mat A_;
  Vec b_;
  Eigen::LLT<Mat> llt_;  // of A A^T
  Vec x0_;
};

/// Sphere {x | |x - center| = radius}, radius > 0. Projection is the radial
/// selector; at the center (where every direction is nearest) the selector
/// returns center + radius * e_1.
class Sphere final : public SetOracle {
 public:
  Sphere(Vec center, double radius);
  int dim() const override { return static_cast<int>(center_.size()); }
  Vec project(const Vec& p) const override;

 private:
  Vec center_;
  double radius_;
};

/// The infinity-norm ball of given radius (default the unit ball, whose
/// projection is the prox of the conjugate of |.|_1). Works in any dimension.
class InfBall final : public SetOracle {
 public:
  explicit InfBall(double radius = 1.0);
  int dim() const override { return 0; }
  Vec project(const Vec& p) const override;

 private:
  double radius_;
};

/// Graph {(y, f(y)) | y in [lo, hi]} of a scalar function, ambient R^2.
/// project() minimizes |v - (y, f(y))|^2 over the declared bracket: a coarse
/// grid scan locates the best local minimum (ties resolve to the smallest y),
/// then golden-section plus a safeguarded secant polish on the stationarity
/// equation refine it to near machine precision.
class FunctionGraph final : public SetOracle {
 public:
  using Fn = std::function<double(double)>;

  FunctionGraph(Fn f, Fn f_prime, double lo, double hi, int scan_points = 129);

  int dim() const override { return 2; }
  Vec project(const Vec& p) const override;

  double f(double y) const { return f_(y); }
  double f_prime(double y) const { return fp_(y); }
  double lo() const { return lo_; }
  double hi() const { return hi_; }

 private:
  Fn f_, fp_;
  double lo_, hi_;
  int scan_points_;
};

/// Prox of kappa * |.|_1 (soft thresholding). Works in any dimension.
class L1Prox final : public ProxOracle {
 public:
  explicit L1Prox(double kappa);
  int dim() const override { return 0; }
  Vec prox(const Vec& p) const override { return shrinkage(p, kappa_); }

 private:
  double kappa_;
};

}  // namespace spiral
