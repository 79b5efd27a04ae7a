#include <cmath>
#include <random>

#include "doctest.h"
#include "geometry.hpp"
#include "support/generators.hpp"

using namespace gdens;
using testsupport::random_convex_polygon;

namespace {

template <class F>
errc code_of(F&& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  return errc::ok;
}

std::vector<Point> pentagon_vertices() {
  return {make_point(-1, -1), make_point(1, -1), make_point(1, 0),
          make_point(0, 1), make_point(-1, 1)};
}

}  // namespace

TEST_CASE("validate_polygon accepts the pentagon as listed") {
  const Polytope p = validate_polygon(pentagon_vertices());
  CHECK(p.dimension == 2);
  REQUIRE(p.vertices.size() == 5);
  CHECK(p.vertices[0][0] == -1.0);  // order preserved for CCW input
  CHECK(p.vertices[2][1] == 0.0);
}

TEST_CASE("validate_polygon accepts the unit triangle") {
  const Polytope t = validate_polygon(
      {make_point(0, 0), make_point(1, 0), make_point(0, 1)});
  CHECK(t.vertices.size() == 3);
}

TEST_CASE("validate_polygon rejects nonconvex input") {
  const auto code = code_of([] {
    validate_polygon({make_point(0, 0), make_point(2, 0), make_point(1, 1),
                      make_point(1, -1)});
  });
  CHECK(code == errc::nonconvex);
}

TEST_CASE("validate_polygon rejects degenerate input") {
  CHECK(code_of([] { validate_polygon({make_point(0, 0), make_point(1, 0)}); }) ==
        errc::degenerate_input);
  CHECK(code_of([] {
          validate_polygon({make_point(0, 0), make_point(0, 0), make_point(1, 1)});
        }) == errc::degenerate_input);
  CHECK(code_of([] {
          validate_polygon({make_point(0, 0), make_point(1, 0), make_point(2, 0)});
        }) == errc::degenerate_input);
  CHECK(code_of([] {
          validate_polygon({make_point(0, 0), make_point(1, 0),
                            make_point(2, 1e-15), make_point(0, 1)});
        }) == errc::degenerate_input);
}

TEST_CASE("validate_polygon rejects unsupported dimensions") {
  Point a(3), b(3), c(3), d(3);
  a << 0, 0, 0;
  b << 1, 0, 0;
  c << 0, 1, 0;
  d << 0, 0, 1;
  CHECK(code_of([&] { validate_polygon({a, b, c, d}); }) ==
        errc::unsupported_dimension);
}

TEST_CASE("clockwise input is reversed to counter-clockwise") {
  std::vector<Point> cw = pentagon_vertices();
  std::reverse(cw.begin(), cw.end());
  const Polytope p = validate_polygon(cw);
  double twice_area = 0.0;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    const Point& a = p.vertices[i];
    const Point& b = p.vertices[(i + 1) % p.vertices.size()];
    twice_area += a[0] * b[1] - a[1] * b[0];
  }
  CHECK(twice_area > 0.0);
  CHECK(area(p) == doctest::Approx(3.5).epsilon(1e-14));
}

TEST_CASE("validate_polygon is idempotent on valid polygons") {
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 50; ++trial) {
    const Polytope p = random_convex_polygon(rng);
    const Polytope q = validate_polygon(p.vertices);
    REQUIRE(q.vertices.size() == p.vertices.size());
    for (std::size_t i = 0; i < p.vertices.size(); ++i)
      CHECK((q.vertices[i] - p.vertices[i]).norm() == 0.0);
  }
}

TEST_CASE("area of the built-in domains") {
  CHECK(area(builtin("pentagon")) == doctest::Approx(3.5).epsilon(1e-15));
  CHECK(area(builtin("trapezium")) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(area(builtin("square")) == doctest::Approx(4.0).epsilon(1e-15));
  const Polytope t = validate_polygon(
      {make_point(0, 0), make_point(1, 0), make_point(0, 1)});
  CHECK(area(t) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("centroid values") {
  const Point cs = centroid(builtin("square"));
  CHECK(std::abs(cs[0]) < 1e-15);
  CHECK(std::abs(cs[1]) < 1e-15);

  const Point cp = centroid(builtin("pentagon"));
  CHECK(cp[0] == doctest::Approx(-2.0 / 21).epsilon(1e-14));
  CHECK(cp[1] == doctest::Approx(-2.0 / 21).epsilon(1e-14));

  const Point ct = centroid(validate_polygon(
      {make_point(0, 0), make_point(1, 0), make_point(0, 1)}));
  CHECK(ct[0] == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(ct[1] == doctest::Approx(1.0 / 3).epsilon(1e-14));
}

TEST_CASE("centroid agrees with the triangulation route and Monte Carlo") {
  const Polytope p = builtin("pentagon");

  // volume-weighted average of triangle centroids
  Point acc = Point::Zero(2);
  double total = 0.0;
  for (const Simplex& s : triangulate(p)) {
    acc += s.signed_volume * (s.vertices[0] + s.vertices[1] + s.vertices[2]) / 3.0;
    total += s.signed_volume;
  }
  const Point via_fan = acc / total;
  CHECK((via_fan - centroid(p)).norm() < 1e-14);

  // rejection sampling in the bounding square
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double sx = 0.0;
  long hits = 0;
  for (long i = 0; i < 400000; ++i) {
    const double x = u(rng), y = u(rng);
    if (x + y <= 1.0) {
      sx += x;
      ++hits;
    }
  }
  CHECK(sx / hits == doctest::Approx(-2.0 / 21).epsilon(0.05));
}

TEST_CASE("fan triangulation covers the polygon") {
  const auto tris_p = triangulate(builtin("pentagon"));
  CHECK(tris_p.size() == 3);
  const auto tris_t = triangulate(builtin("trapezium"));
  CHECK(tris_t.size() == 2);

  double sum = 0.0;
  for (const Simplex& s : tris_p) {
    CHECK(s.signed_volume > 0.0);
    sum += s.signed_volume;
  }
  CHECK(sum == doctest::Approx(3.5).epsilon(1e-15));

  const Polytope t = validate_polygon(
      {make_point(0, 0), make_point(1, 0), make_point(0, 1)});
  const auto self = triangulate(t);
  REQUIRE(self.size() == 1);
  CHECK(self[0].signed_volume == doctest::Approx(0.5));
}

TEST_CASE("triangulation volumes sum to the area on random polygons") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Polytope p = random_convex_polygon(rng);
    double sum = 0.0;
    for (const Simplex& s : triangulate(p)) {
      CHECK(s.signed_volume > 0.0);
      sum += s.signed_volume;
    }
    CHECK(std::abs(sum - area(p)) <= 1e-14 * area(p));
  }
}

TEST_CASE("area is translation invariant and scales quadratically") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> shift(-5.0, 5.0);
  for (int trial = 0; trial < 50; ++trial) {
    const Polytope p = random_convex_polygon(rng);
    const double a0 = area(p);

    Polytope moved = p;
    const Point t = make_point(shift(rng), shift(rng));
    for (Point& v : moved.vertices) v += t;
    CHECK(area(moved) == doctest::Approx(a0).epsilon(1e-12));

    const double lambda = 1.7;
    Polytope scaled = p;
    for (Point& v : scaled.vertices) v *= lambda;
    CHECK(area(scaled) == doctest::Approx(lambda * lambda * a0).epsilon(1e-12));
  }
}

TEST_CASE("builtin names") {
  CHECK(builtin("pentagon").vertices.size() == 5);
  CHECK(builtin("trapezium").vertices.size() == 4);
  CHECK(builtin("square").vertices.size() == 4);
  CHECK(code_of([] { builtin("hexagon"); }) == errc::unknown_name);
}

TEST_CASE("trapezium vertex set matches its definition") {
  const Polytope t = builtin("trapezium");
  const std::vector<Point> expected = {make_point(2, -1), make_point(-1, 2),
                                       make_point(-1, 0), make_point(0, -1)};
  for (const Point& e : expected) {
    bool found = false;
    for (const Point& v : t.vertices) found = found || (v - e).norm() < 1e-15;
    CHECK(found);
  }
}

TEST_CASE("centroid lies strictly inside") {
  for (const char* name : {"pentagon", "trapezium", "square"}) {
    const Polytope p = builtin(name);
    CHECK(contains(p, centroid(p)));
  }
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const Polytope p = random_convex_polygon(rng);
    CHECK(contains(p, centroid(p)));
  }
  CHECK_FALSE(contains(builtin("square"), make_point(1.5, 0.0)));
}
