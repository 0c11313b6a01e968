#include <doctest.h>

#include <random>

#include "spiral/geometry.hpp"
#include "support/test_support.hpp"

using namespace spiral;
using spiral::testing::circumcenter_bruteforce_2d;
using spiral::testing::random_orthogonal;
using spiral::testing::random_vec;

namespace {

Vec v2(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}

Vec v3(double x, double y, double z) {
  Vec v(3);
  v << x, y, z;
  return v;
}

}  // namespace

TEST_CASE("circumcenter: degenerate cardinalities") {
  const Vec p = v2(1.5, -2.0);
  auto c = circumcenter(p, p, p);
  REQUIRE(c.has_value());
  CHECK(*c == p);

  // Midpoint reduction is exact for the implemented formula.
  const Vec b = v2(3.0, 4.0);
  CHECK(*circumcenter(p, p, b) == Vec(0.5 * (p + b)));
  CHECK(*circumcenter(p, b, p) == Vec(0.5 * (p + b)));
  CHECK(*circumcenter(b, p, p) == Vec(0.5 * (b + p)));
}

TEST_CASE("circumcenter: right triangle lands at (1,1)") {
  auto c = circumcenter(v2(0, 0), v2(2, 0), v2(0, 2));
  REQUIRE(c.has_value());
  CHECK((*c - v2(1, 1)).norm() == doctest::Approx(0.0).epsilon(1e-14));
  const double ra = (*c - v2(0, 0)).norm();
  CHECK((*c - v2(2, 0)).norm() == doctest::Approx(ra));
  CHECK((*c - v2(0, 2)).norm() == doctest::Approx(ra));
}

TEST_CASE("circumcenter: Gram system solution") {
  // By hand: u=(2,0), v=(1,5), Gram [[4,2],[2,26]], rhs (2,13),
  // alpha=0.26, beta=0.48 -> center (1, 2.4).
  auto c = circumcenter(v2(0, 0), v2(2, 0), v2(1, 5));
  REQUIRE(c.has_value());
  CHECK((*c - v2(1.0, 2.4)).norm() < 1e-13);
}

TEST_CASE("circumcenter: distinct colinear points rejected") {
  CHECK(!circumcenter(v2(0, 0), v2(1, 0), v2(2, 0)).has_value());
  CHECK_THROWS_AS((void)circumcenter(v2(0, 0), v2(1, 0), v3(0, 1, 0)),
                  DimensionMismatch);
}

TEST_CASE("colinearity_test: examples") {
  CHECK(colinearity_test(v2(0, 0), v2(1, 0), v2(2, 0)).is_colinear);

  const auto rep = colinearity_test(v2(0, 0), v2(1, 0), v2(0, 1));
  CHECK(!rep.is_colinear);
  CHECK(rep.gram_det == doctest::Approx(1.0));  // identity Gram matrix
  CHECK(rep.scale == doctest::Approx(1.0));

  CHECK(colinearity_test(v2(0, 0), v2(0, 0), v2(5, 5)).is_colinear);
}

TEST_CASE("colinearity_test: verdict is symmetric in its arguments") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    const Vec a = random_vec(rng, 3), b = random_vec(rng, 3),
              c = random_vec(rng, 3);
    const bool base = colinearity_test(a, b, c).is_colinear;
    CHECK(colinearity_test(a, c, b).is_colinear == base);
    CHECK(colinearity_test(b, a, c).is_colinear == base);
    CHECK(colinearity_test(b, c, a).is_colinear == base);
    CHECK(colinearity_test(c, a, b).is_colinear == base);
    CHECK(colinearity_test(c, b, a).is_colinear == base);
  }
}

TEST_CASE("Bisector: membership") {
  // H((0,0),(2,0)) is the vertical line x = 1.
  const Bisector h(v2(0, 0), v2(2, 0));
  CHECK(h.contains(v2(1, 7)));
  CHECK(!h.contains(v2(0, 0)));

  // H((0,0),(0,2)): midpoint (0,1), normal direction (0,-2).
  const Bisector g(v2(0, 0), v2(0, 2));
  CHECK(g.contains(v2(-3, 1)));

  CHECK_THROWS_AS(Bisector(v2(1, 1), v2(1, 1)), std::invalid_argument);
}

TEST_CASE("project_affine_hull: examples") {
  CHECK((project_affine_hull(v3(1, 1, 1), {v3(0, 0, 0), v3(1, 0, 0)}) -
         v3(1, 0, 0))
            .norm() < 1e-14);

  // Hull spanning the full space: identity.
  const Vec p = v3(0.3, -0.7, 2.0);
  CHECK((project_affine_hull(
             p, {v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)}) -
         p)
            .norm() < 1e-14);

  CHECK(project_affine_hull(v3(0, 0, 2), {v3(0, 0, 0), v3(1, 1, 0)}).norm() <
        1e-14);

  // Repeated basis points contribute nothing.
  CHECK((project_affine_hull(v3(1, 1, 1), {v3(0, 0, 0), v3(1, 0, 0),
                                           v3(2, 0, 0), v3(1, 0, 0)}) -
         v3(1, 0, 0))
            .norm() < 1e-14);

  CHECK_THROWS_AS(project_affine_hull(p, {}), std::invalid_argument);
}

TEST_CASE("circumcenter: equidistance and hull membership on random triples") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> Ud(2, 10);
  for (int it = 0; it < 500; ++it) {
    const int d = Ud(rng);
    const Vec a = random_vec(rng, d), b = random_vec(rng, d),
              c = random_vec(rng, d);
    if (colinearity_test(a, b, c).is_colinear) continue;
    const auto p = circumcenter(a, b, c);
    REQUIRE(p.has_value());
    const double scale = 1.0 + a.norm() + b.norm() + c.norm();
    CHECK(std::abs((*p - a).norm() - (*p - b).norm()) <= 1e-9 * scale);
    CHECK(std::abs((*p - a).norm() - (*p - c).norm()) <= 1e-9 * scale);
    const Vec rel = *p - a;
    CHECK((project_affine_hull(rel, {Vec::Zero(d), b - a, c - a}) - rel).norm() <=
          1e-9 * scale);
  }
}

TEST_CASE("circumcenter: translation/rotation equivariance") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 100; ++it) {
    const int d = 4;
    const Vec a = random_vec(rng, d), b = random_vec(rng, d),
              c = random_vec(rng, d);
    if (colinearity_test(a, b, c).is_colinear) continue;
    const Mat R = random_orthogonal(rng, d);
    const Vec t = random_vec(rng, d);
    const auto p = circumcenter(a, b, c);
    const auto q = circumcenter(R * a + t, R * b + t, R * c + t);
    REQUIRE(p.has_value());
    REQUIRE(q.has_value());
    CHECK((*q - (R * *p + t)).norm() <= 1e-9 * (1.0 + p->norm()));
  }
}

TEST_CASE("circumcenter: agrees with the 2x2 bisector-intersection oracle") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> Ud(2, 10);
  for (int it = 0; it < 500; ++it) {
    const int d = Ud(rng);
    const Vec a = random_vec(rng, d), b = random_vec(rng, d),
              c = random_vec(rng, d);
    if (colinearity_test(a, b, c).is_colinear) continue;
    const auto p = circumcenter(a, b, c);
    REQUIRE(p.has_value());
    const Vec q = circumcenter_bruteforce_2d(a, b, c);
    // Normalize by the output magnitude too: thin triangles have large
    // circumradius, and any backward-stable route scales its forward error
    // with it.
    const double scale = 1.0 + a.norm() + b.norm() + c.norm() + p->norm();
    CHECK((q - *p).norm() <= 1e-9 * scale);
  }
}
