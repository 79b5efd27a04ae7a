#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "errors.hpp"

namespace gdens {

/// scale * numerator(x) / denominator(x), coefficients in ascending powers.
/// Evaluation rejects points where the denominator is within rounding
/// distance of a real root.
struct RationalFn {
  double scale = 1.0;
  std::vector<double> numerator;
  std::vector<double> denominator;

  double operator()(double x) const;
};

struct MinimizationResult {
  Eigen::VectorXd argmin;
  double value = 0.0;
  double gradient_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Golden-section search to bracket width tol followed by a Newton polish on
/// the central-difference derivative. The argmin is accurate to tol, the
/// value to tol^2 level. converged means the bracket reached tol and the
/// final central-difference derivative satisfies
/// |f'| <= 1e-6 * (1 + |value|); gradient_norm reports that derivative.
/// Multi-modal functions are out of contract and may yield any local
/// minimum.
MinimizationResult minimize_scalar(const std::function<double(double)>& fn,
                                   double lo, double hi, double tol);

/// minimize_scalar on a rational function; rejects brackets containing a
/// denominator root.
MinimizationResult minimize_rational(const RationalFn& r, double lo, double hi,
                                     double tol);

/// Strictly convex objective with exact derivatives.
struct ConvexObjective {
  std::function<double(const Eigen::VectorXd&)> value;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> gradient;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> hessian;
};

/// Damped Newton iteration (step halving on the value, at most 40 halvings,
/// cap of 100 iterations) until the gradient norm reaches tol. The Hessian
/// must be symmetric positive definite; a condition estimate above 1e14
/// raises singular_hessian.
MinimizationResult minimize_convex_newton(const ConvexObjective& objective,
                                          const Eigen::VectorXd& init,
                                          double tol);

}  // namespace gdens
