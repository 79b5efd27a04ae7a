#include "geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gdens {

namespace {

constexpr double kDegeneracyScale = 1e-12;

double cross2(const Point& a, const Point& b) {
  return a[0] * b[1] - a[1] * b[0];
}

double squared_diameter(const std::vector<Point>& vs) {
  double d2 = 0.0;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      d2 = std::max(d2, (vs[i] - vs[j]).squaredNorm());
  return d2;
}

double twice_signed_area(const std::vector<Point>& vs) {
  double acc = 0.0;
  for (std::size_t i = 0; i < vs.size(); ++i)
    acc += cross2(vs[i], vs[(i + 1) % vs.size()]);
  return acc;
}

}  // namespace

Point make_point(double x, double y) {
  Point p(2);
  p << x, y;
  return p;
}

Polytope validate_polygon(const std::vector<Point>& raw_vertices) {
  if (raw_vertices.size() < 3)
    fail(errc::degenerate_input, "polygon needs at least 3 vertices");
  for (const Point& v : raw_vertices) {
    if (v.size() != raw_vertices.front().size())
      fail(errc::invalid_argument, "vertices have mixed dimensions");
    if (!v.allFinite())
      fail(errc::invalid_argument, "vertex coordinates must be finite");
  }
  if (raw_vertices.front().size() != 2)
    fail(errc::unsupported_dimension, "only 2-D polygons are supported");

  const std::size_t n = raw_vertices.size();
  const double tol = kDegeneracyScale * squared_diameter(raw_vertices);
  if (tol <= 0.0) fail(errc::degenerate_input, "all vertices coincide");

  for (std::size_t i = 0; i < n; ++i) {
    if ((raw_vertices[i] - raw_vertices[(i + 1) % n]).squaredNorm() <= tol)
      fail(errc::degenerate_input,
           "repeated vertex at position " + std::to_string(i));
  }

  std::vector<Point> vs = raw_vertices;
  if (twice_signed_area(vs) < 0.0) std::reverse(vs.begin(), vs.end());

  for (std::size_t i = 0; i < n; ++i) {
    const Point e0 = vs[(i + 1) % n] - vs[i];
    const Point e1 = vs[(i + 2) % n] - vs[(i + 1) % n];
    const double c = cross2(e0, e1);
    if (std::abs(c) <= tol)
      fail(errc::degenerate_input,
           "collinear vertices around position " + std::to_string(i + 1));
    if (c < 0.0)
      fail(errc::nonconvex,
           "cross-product sign change at vertex " + std::to_string(i + 1));
  }

  return Polytope{std::move(vs), 2};
}

double area(const Polytope& p) {
  return 0.5 * twice_signed_area(p.vertices);
}

Point centroid(const Polytope& p) {
  const std::size_t n = p.vertices.size();
  Point c = Point::Zero(2);
  double twice_area = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = p.vertices[i];
    const Point& b = p.vertices[(i + 1) % n];
    const double w = cross2(a, b);
    twice_area += w;
    c += w * (a + b);
  }
  return c / (3.0 * twice_area);
}

std::vector<Simplex> triangulate(const Polytope& p) {
  std::vector<Simplex> out;
  const Point& v0 = p.vertices.front();
  for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) {
    const Point& a = p.vertices[i];
    const Point& b = p.vertices[i + 1];
    const double vol = 0.5 * cross2(a - v0, b - v0);
    out.push_back(Simplex{{v0, a, b}, vol});
  }
  return out;
}

Polytope builtin(std::string_view name) {
  if (name == "pentagon")
    return validate_polygon({make_point(-1, -1), make_point(1, -1),
                             make_point(1, 0), make_point(0, 1),
                             make_point(-1, 1)});
  if (name == "trapezium")
    return validate_polygon({make_point(2, -1), make_point(-1, 2),
                             make_point(-1, 0), make_point(0, -1)});
  if (name == "square")
    return validate_polygon({make_point(-1, -1), make_point(1, -1),
                             make_point(1, 1), make_point(-1, 1)});
  fail(errc::unknown_name, "unknown builtin polytope \"" + std::string(name) +
                               "\" (expected pentagon, trapezium or square)");
}

bool contains(const Polytope& p, const Point& x) {
  const std::size_t n = p.vertices.size();
  const double tol = kDegeneracyScale * squared_diameter(p.vertices);
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = p.vertices[i];
    const Point& b = p.vertices[(i + 1) % n];
    if (cross2(b - a, x - a) < -tol) return false;
  }
  return true;
}

}  // namespace gdens
