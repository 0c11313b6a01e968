#include "spiral/geometry.hpp"

namespace spiral {

ColinearityReport colinearity_test(const Vec& a, const Vec& b, const Vec& c,
                                   double eps_col) {
  require_same_dim(a, b, "colinearity_test");
  require_same_dim(a, c, "colinearity_test");

  const Vec u = b - a;
  const Vec v = c - a;
  const double uu = u.squaredNorm();
  const double vv = v.squaredNorm();
  const double uv = u.dot(v);

  ColinearityReport r;
  r.scale = uu * vv;
  r.gram_det = uu * vv - uv * uv;
  r.is_colinear = r.gram_det <= eps_col * r.scale;  // covers scale == 0
  return r;
}

std::optional<Vec> circumcenter(const Vec& a, const Vec& b, const Vec& c,
                                double eps_col) {
  require_same_dim(a, b, "circumcenter");
  require_same_dim(a, c, "circumcenter");

  const bool ab = (a == b), ac = (a == c), bc = (b == c);
  if (ab && ac) return a;
  if (ab) return Vec(0.5 * (a + c));
  if (ac || bc) return Vec(0.5 * (a + b));

  const Vec u = b - a;
  const Vec v = c - a;
  const double uu = u.squaredNorm();
  const double vv = v.squaredNorm();
  const double uv = u.dot(v);
  const double det = uu * vv - uv * uv;
  if (det <= eps_col * uu * vv) return std::nullopt;  // distinct colinear

  const double alpha = (vv * uu - uv * vv) * 0.5 / det;
  const double beta = (uu * vv - uv * uu) * 0.5 / det;
  return Vec(a + alpha * u + beta * v);
}

Bisector::Bisector(Vec anchor_y, Vec anchor_z)
    : y_(std::move(anchor_y)), z_(std::move(anchor_z)) {
  require_same_dim(y_, z_, "Bisector");
  if (y_ == z_)
    throw std::invalid_argument("Bisector: coincident anchors have no bisector");
}

double Bisector::residual(const Vec& p) const {
  require_same_dim(p, y_, "Bisector::residual");
  const Vec d = y_ - z_;
  const double num = std::abs((p - midpoint()).dot(d));
  return num / (d.norm() * (1.0 + p.norm()));
}

Vec project_affine_hull(const Vec& p, const std::vector<Vec>& basis_points,
                        double rank_tol) {
  if (basis_points.empty())
    throw std::invalid_argument("project_affine_hull: empty basis");
  for (const Vec& b : basis_points) require_same_dim(p, b, "project_affine_hull");

  std::vector<Vec> q;  // orthonormal basis of span{b_i - b_0}
  const Vec& b0 = basis_points.front();
  for (std::size_t i = 1; i < basis_points.size(); ++i) {
    Vec d = basis_points[i] - b0;
    const double n0 = d.norm();
    if (n0 == 0.0) continue;
    for (const Vec& e : q) d -= e.dot(d) * e;
    for (const Vec& e : q) d -= e.dot(d) * e;  // second MGS pass
    const double n1 = d.norm();
    if (n1 > rank_tol * n0) q.push_back(d / n1);
  }

  Vec out = Vec::Zero(p.size());
  for (const Vec& e : q) out += e.dot(p) * e;
  return out;
}

}  // namespace spiral
