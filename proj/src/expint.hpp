#pragma once

#include <vector>

#include "geometry.hpp"

namespace gdens {

/// Affine form <coefficients, x> + offset. The offset always factors out of
/// integrals as exp(offset); it is never folded into divided-difference
/// nodes.
struct LinearForm {
  Eigen::VectorXd coefficients;
  double offset = 0.0;

  double operator()(const Point& x) const {
    return coefficients.dot(x) + offset;
  }
  double linear_part(const Point& x) const { return coefficients.dot(x); }

  static LinearForm zero(int dimension) {
    return LinearForm{Eigen::VectorXd::Zero(dimension), 0.0};
  }
};

/// Divided-difference arguments: node values with confluency counts.
/// A value of multiplicity k contributes k coincident arguments.
struct NodeList {
  std::vector<double> values;
  std::vector<int> multiplicities;

  static NodeList simple(std::vector<double> vals) {
    NodeList n;
    n.multiplicities.assign(vals.size(), 1);
    n.values = std::move(vals);
    return n;
  }
};

/// Confluent divided difference exp[t_0, ..., t_{m-1}] of the exponential.
///
/// Evaluated as the (0, m-1) entry of exp(Z) for the bidiagonal matrix Z
/// with the nodes on the diagonal and ones above it: the nodes are shifted
/// to their midpoint, scaled by 2^-k until the spread is at most 1/2, the
/// Taylor series is summed (all entries nonnegative, so no cancellation),
/// and the result squared back k times. Uniformly accurate for clustered,
/// coincident and well-separated nodes alike; the value is strictly
/// positive and symmetric in the nodes.
double dd_exp(const NodeList& nodes);

/// Exact integral of exp(form(x)) over a simplex:
///   d! * |vol| * exp[form(v_0), ..., form(v_d)] * e^offset.
double simplex_exp_integral(const Simplex& s, const LinearForm& form);

/// Exact integral of exp(form(x)) over a polytope (sum over the fan
/// triangulation). Strictly positive.
double polytope_exp_integral(const Polytope& p, const LinearForm& form);

/// Exact integral of x_axis * exp(form(x)); axis is zero-based. On each
/// simplex the barycentric weight integral doubles one node:
///   int x_i e^form = d!*|vol| * sum_j (v_j)_i exp[t_0,...,t_d, t_j].
double polytope_moment1(const Polytope& p, const LinearForm& form, int axis);

/// Exact integral of x_i * x_j * exp(form(x)); the barycentric product
/// expansion triples or doubles nodes (a factor alpha! = 2 appears on the
/// diagonal terms).
double polytope_moment2(const Polytope& p, const LinearForm& form, int axis_i,
                        int axis_j);

/// Independent verification path: integral of x^monomial * exp(form(x))
/// approximated by a fixed symmetric high-order triangle rule under uniform
/// refinement until two successive levels differ by less than
/// tol * max(1, |value|). The monomial has one exponent per coordinate,
/// total degree at most 2. Throws no_convergence when the refinement budget
/// is exhausted.
double quadrature_oracle(const Polytope& p, const LinearForm& form,
                         const std::vector<int>& monomial, double tol);

}  // namespace gdens
