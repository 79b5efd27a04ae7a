#pragma once

#include <Eigen/Dense>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace gdens {

using Point = Eigen::VectorXd;

Point make_point(double x, double y);

/// Strictly convex polytope stored as an ordered vertex cycle
/// (counter-clockwise for dimension 2). Construct through
/// validate_polygon() or builtin(); all operations assume a valid value.
struct Polytope {
  std::vector<Point> vertices;
  int dimension = 0;
};

/// d-simplex with signed volume det(edge matrix)/d!.
struct Simplex {
  std::vector<Point> vertices;  // exactly d+1 points
  double signed_volume = 0.0;
};

/// Checks a 2-D vertex cycle and normalizes it to counter-clockwise order.
/// Degeneracy is judged against 1e-12 times the squared polygon diameter.
/// Throws: degenerate_input, nonconvex, unsupported_dimension,
/// invalid_argument.
Polytope validate_polygon(const std::vector<Point>& raw_vertices);

/// Enclosed area (shoelace), strictly positive for a valid polygon.
double area(const Polytope& p);

/// Area-weighted centroid.
Point centroid(const Polytope& p);

/// Fan triangulation from vertex 0; all signed volumes positive and summing
/// to area(p).
std::vector<Simplex> triangulate(const Polytope& p);

/// Built-in domains: "pentagon" (moment polytope of CP^2 # 2CP^2-bar),
/// "trapezium" (moment polytope of CP^2 # CP^2-bar), "square" ([-1,1]^2).
/// Throws unknown_name otherwise.
Polytope builtin(std::string_view name);

/// Closed-polygon membership test.
bool contains(const Polytope& p, const Point& x);

}  // namespace gdens
