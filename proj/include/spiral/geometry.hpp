#pragma once

#include <optional>
#include <vector>

#include "spiral/types.hpp"

namespace spiral {

/// Outcome of the colinearity guard for a point triple (a, b, c).
///
/// gram_det is the determinant of the Gram matrix of the edge vectors
/// u = b - a, v = c - a; it equals (2 * triangle area)^2 and is therefore
/// invariant under permutations of the triple. The verdict compares it
/// against eps_col * scale with scale = |u|^2 * |v|^2, so coincident points
/// always report colinear.
struct ColinearityReport {
  bool is_colinear = false;
  double gram_det = 0.0;
  double scale = 0.0;
};

ColinearityReport colinearity_test(const Vec& a, const Vec& b, const Vec& c,
                                   double eps_col = kColinearEps);

/// Circumcenter of up to three points: the point of aff{a,b,c} equidistant
/// to all of them.
///
///  - all three coincide        -> a
///  - exactly two distinct      -> midpoint of the distinct pair
///  - distinct and colinear     -> nullopt (caller takes its fallback branch)
///  - otherwise                 -> a + alpha*u + beta*v, where (alpha, beta)
///    solves the 2x2 Gram system
///        [<u,u> <u,v>; <u,v> <v,v>] (alpha, beta)^T = (|u|^2, |v|^2)^T / 2.
///
/// Coincidence is tested exactly; near-coincident triples are caught by the
/// colinearity guard instead.
std::optional<Vec> circumcenter(const Vec& a, const Vec& b, const Vec& c,
                                double eps_col = kColinearEps);

/// Perpendicular bisector H(y, z) of the segment joining two distinct
/// anchors. Membership is tested as
///   |<p - (y+z)/2, y - z>| <= tol * |y - z| * (1 + |p|).
class Bisector {
 public:
  Bisector(Vec anchor_y, Vec anchor_z);

  const Vec& anchor_y() const { return y_; }
  const Vec& anchor_z() const { return z_; }
  Vec midpoint() const { return 0.5 * (y_ + z_); }

  /// Normalized membership residual; contains(p, tol) <=> residual(p) <= tol.
  double residual(const Vec& p) const;
  bool contains(const Vec& p, double tol = 1e-10) const {
    return residual(p) <= tol;
  }

 private:
  Vec y_, z_;
};

/// Orthogonal projection of p onto the direction subspace
/// span{b_i - b_0} of the affine hull of basis_points, via modified
/// Gram-Schmidt with a relative rank tolerance.
Vec project_affine_hull(const Vec& p, const std::vector<Vec>& basis_points,
                        double rank_tol = 1e-12);

}  // namespace spiral
