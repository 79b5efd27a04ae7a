#include "optimize.hpp"

#include <algorithm>
#include <cmath>

namespace gdens {

namespace {

constexpr int kGoldenCap = 400;
constexpr int kPolishCap = 12;
constexpr int kNewtonCap = 100;
constexpr int kHalvingCap = 40;

double horner(const std::vector<double>& coeffs, double x) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// |denominator| scale at x, for the near-root rejection test.
double poly_scale(const std::vector<double>& coeffs, double x) {
  double acc = 0.0, xp = 1.0;
  for (double c : coeffs) {
    acc += std::abs(c) * std::abs(xp);
    xp *= x;
  }
  return std::max(acc, 1e-300);
}

double checked_eval(const std::function<double(double)>& fn, double x) {
  const double v = fn(x);
  if (!std::isfinite(v))
    fail(errc::bad_bracket, "objective is not finite inside the bracket");
  return v;
}

}  // namespace

double RationalFn::operator()(double x) const {
  if (denominator.empty())
    fail(errc::invalid_argument, "denominator must not be empty");
  const double den = horner(denominator, x);
  if (std::abs(den) <= 1e-12 * poly_scale(denominator, x))
    fail(errc::pole_in_bracket, "evaluation too close to a denominator root");
  return scale * horner(numerator, x) / den;
}

MinimizationResult minimize_scalar(const std::function<double(double)>& fn,
                                   double lo, double hi, double tol) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
    fail(errc::bad_bracket, "bracket must satisfy lo < hi with finite ends");
  if (!(tol > 0.0)) fail(errc::invalid_argument, "tolerance must be positive");

  static const double kInvPhi = (std::sqrt(5.0) - 1.0) / 2.0;

  double a = lo, b = hi;
  checked_eval(fn, a);
  checked_eval(fn, b);
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = checked_eval(fn, x1);
  double f2 = checked_eval(fn, x2);

  int iterations = 0;
  while (b - a > tol) {
    if (++iterations > kGoldenCap)
      fail(errc::no_convergence, "golden-section iteration cap reached");
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = checked_eval(fn, x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = checked_eval(fn, x2);
    }
  }

  double x = 0.5 * (a + b);
  double fx = checked_eval(fn, x);

  // Newton polish on central differences; accepted only while the value
  // does not increase beyond rounding noise.
  const auto derivative_step = [&](double at) {
    return 6e-6 * std::max(1.0, std::abs(at));
  };
  double grad = 0.0;
  for (int it = 0; it < kPolishCap; ++it) {
    const double h = derivative_step(x);
    const double fp = checked_eval(fn, x + h);
    const double fm = checked_eval(fn, x - h);
    grad = (fp - fm) / (2.0 * h);
    const double hess = (fp - 2.0 * fx + fm) / (h * h);
    ++iterations;
    if (!(hess > 0.0)) break;
    const double step = -grad / hess;
    if (std::abs(step) <= 1e-18 * std::max(1.0, std::abs(x))) break;
    const double xn = std::clamp(x + step, lo, hi);
    const double fxn = checked_eval(fn, xn);
    if (fxn > fx + 1e-12 * (1.0 + std::abs(fx))) break;
    x = xn;
    fx = fxn;
    if (std::abs(step) <= 1e-12 * std::max(1.0, std::abs(x))) break;
  }
  {
    const double h = derivative_step(x);
    grad = (checked_eval(fn, x + h) - checked_eval(fn, x - h)) / (2.0 * h);
  }

  MinimizationResult result;
  result.argmin = Eigen::VectorXd::Constant(1, x);
  result.value = fx;
  result.gradient_norm = std::abs(grad);
  result.iterations = iterations;
  result.converged =
      (b - a <= tol) && result.gradient_norm <= 1e-6 * (1.0 + std::abs(fx));
  return result;
}

MinimizationResult minimize_rational(const RationalFn& r, double lo,
                                     double hi, double tol) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
    fail(errc::bad_bracket, "bracket must satisfy lo < hi with finite ends");

  // Pole scan: a sign change or near-zero of the denominator rejects the
  // bracket before any minimization work happens.
  const int samples = 4096;
  double prev_den = horner(r.denominator, lo);
  for (int i = 0; i <= samples; ++i) {
    const double x = lo + (hi - lo) * i / samples;
    const double den = horner(r.denominator, x);
    if (std::abs(den) <= 1e-12 * poly_scale(r.denominator, x) ||
        (i > 0 && std::signbit(den) != std::signbit(prev_den)))
      fail(errc::pole_in_bracket, "denominator root inside bracket");
    prev_den = den;
  }

  return minimize_scalar([&r](double x) { return r(x); }, lo, hi, tol);
}

MinimizationResult minimize_convex_newton(const ConvexObjective& objective,
                                          const Eigen::VectorXd& init,
                                          double tol) {
  if (!(tol > 0.0)) fail(errc::invalid_argument, "tolerance must be positive");
  if (!init.allFinite())
    fail(errc::invalid_argument, "initial point must be finite");

  Eigen::VectorXd x = init;
  double fx = objective.value(x);
  if (!std::isfinite(fx))
    fail(errc::bad_bracket, "objective not finite at the initial point");

  MinimizationResult result;
  for (int iter = 0; iter < kNewtonCap; ++iter) {
    const Eigen::VectorXd g = objective.gradient(x);
    const double gn = g.norm();
    if (gn <= tol) {
      result.argmin = x;
      result.value = fx;
      result.gradient_norm = gn;
      result.iterations = iter;
      result.converged = true;
      return result;
    }

    const Eigen::MatrixXd H = objective.hessian(x);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(H);
    const double lo_eig = eig.eigenvalues().minCoeff();
    const double hi_eig = eig.eigenvalues().maxCoeff();
    if (!(lo_eig > 0.0) || hi_eig / lo_eig > 1e14)
      fail(errc::singular_hessian,
           "Hessian not positive definite within conditioning limits");

    const Eigen::VectorXd step = H.ldlt().solve(-g);
    double alpha = 1.0;
    bool accepted = false;
    for (int h = 0; h <= kHalvingCap; ++h) {
      const Eigen::VectorXd xn = x + alpha * step;
      const double fxn = objective.value(xn);
      // Non-strict decrease: near the minimum the true decrease falls
      // below double resolution of the value.
      if (std::isfinite(fxn) && fxn <= fx + 4e-16 * (1.0 + std::abs(fx))) {
        x = xn;
        fx = fxn;
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted)
      fail(errc::no_convergence, "line search failed to decrease the value");
  }
  fail(errc::no_convergence, "Newton iteration cap reached");
}

}  // namespace gdens
