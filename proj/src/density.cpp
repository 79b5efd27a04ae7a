#include "density.hpp"

#include <cmath>
#include <numbers>

namespace gdens {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

LinearForm scaled_form(const Eigen::VectorXd& c, double factor) {
  return LinearForm{factor * c, 0.0};
}

ConvexObjective partition_objective(const Polytope& p) {
  return ConvexObjective{
      [&p](const Eigen::VectorXd& c) {
        return polytope_exp_integral(p, scaled_form(c, -1.0));
      },
      [&p](const Eigen::VectorXd& c) {
        Eigen::VectorXd g(p.dimension);
        for (int i = 0; i < p.dimension; ++i)
          g[i] = -polytope_moment1(p, scaled_form(c, -1.0), i);
        return g;
      },
      [&p](const Eigen::VectorXd& c) {
        Eigen::MatrixXd H(p.dimension, p.dimension);
        for (int i = 0; i < p.dimension; ++i)
          for (int j = i; j < p.dimension; ++j) {
            H(i, j) = polytope_moment2(p, scaled_form(c, -1.0), i, j);
            H(j, i) = H(i, j);
          }
        return H;
      }};
}

// Restriction of the partition objective to c * (1, ..., 1).
ConvexObjective diagonal_objective(const Polytope& p) {
  const int d = p.dimension;
  const auto expand = [d](const Eigen::VectorXd& s) {
    return Eigen::VectorXd::Constant(d, s[0]).eval();
  };
  const ConvexObjective full = partition_objective(p);
  return ConvexObjective{
      [full, expand](const Eigen::VectorXd& s) {
        return full.value(expand(s));
      },
      [full, expand](const Eigen::VectorXd& s) {
        return Eigen::VectorXd::Constant(1, full.gradient(expand(s)).sum())
            .eval();
      },
      [full, expand](const Eigen::VectorXd& s) {
        return Eigen::MatrixXd::Constant(1, 1, full.hessian(expand(s)).sum())
            .eval();
      }};
}

// The moment constraint int x_i e^{-<c,x>} = 0 is satisfiable exactly when
// the origin lies strictly inside the polytope; otherwise the functional has
// no minimizer and the Newton run would chase the decaying tail.
bool origin_strictly_interior(const Polytope& p) {
  const std::size_t n = p.vertices.size();
  double diam2 = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      diam2 = std::max(diam2, (p.vertices[i] - p.vertices[j]).squaredNorm());
  const double tol = 1e-12 * diam2;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = p.vertices[i];
    const Point& b = p.vertices[(i + 1) % n];
    const double cross = (b[0] - a[0]) * (-a[1]) - (b[1] - a[1]) * (-a[0]);
    if (cross <= tol) return false;
  }
  return true;
}

bool same_vertex_set(const Polytope& a, const Polytope& b) {
  if (a.vertices.size() != b.vertices.size()) return false;
  for (const Point& v : a.vertices) {
    bool found = false;
    for (const Point& w : b.vertices)
      if ((v - w).norm() < 1e-12) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

// Closed forms in long double with small-|c| series past the removable
// singularity at c = 0.
long double pentagon_closed_form(long double c) {
  if (fabsl(c) < 1e-3L)
    return 3.5L + (2.0L / 3.0L) * c + (7.0L / 8.0L) * c * c +
           (13.0L / 60.0L) * c * c * c + (71.0L / 720.0L) * c * c * c * c;
  return (expl(2.0L * c) - 2.0L + (1.0L - c) * expl(-c)) / (c * c);
}

long double trapezium_quoted_form(long double c) {
  if (fabsl(c) < 1e-3L)
    return 4.5L + 1.125L * c * c + 0.15L * c * c * c +
           0.1125L * c * c * c * c;
  return (expl(2.0L * c) - expl(-c) - 3.0L * c * expl(-c)) / (c * c);
}

long double trapezium_corrected_form(long double c) {
  if (fabsl(c) < 1e-3L)
    return 4.0L - (2.0L / 3.0L) * c + (2.0L / 3.0L) * c * c -
           (1.0L / 15.0L) * c * c * c + (1.0L / 30.0L) * c * c * c * c;
  return (expl(c) * (c + 1.0L) - expl(-c) * (3.0L * c + 1.0L)) / (c * c);
}

void append_closed_form_intermediates(DensityReport& report,
                                      const ClosedFormCheck& check) {
  if (!check.has_reference) return;
  report.add("closed_form_engine", check.engine_value);
  report.add("closed_form_reference", check.reference_value);
  report.add("closed_form_corrected", check.corrected_value);
  report.add("closed_form_consistent", check.reference_consistent ? 1.0 : 0.0);
}

}  // namespace

double DensityReport::intermediate(std::string_view name) const {
  for (const auto& [key, value] : intermediates)
    if (key == name) return value;
  fail(errc::unknown_name, "no intermediate named \"" + std::string(name) + '"');
}

bool DensityReport::has_intermediate(std::string_view name) const {
  for (const auto& [key, value] : intermediates)
    if (key == name) return true;
  return false;
}

CalabiProfile clbw_profile() {
  return CalabiProfile{
      RationalFn{3.0,
                 {32, 176, 318, 280, 132, 32, 3},
                 {12, 72, 138, 120, 54, 12, 1}},
      32.0 * kPi * kPi, 0.0, 5.0};
}

CalabiProfile page_profile() {
  return CalabiProfile{RationalFn{1.0, {4, 14, 16, 3}, {0, 6, 6, 1}},
                       96.0 * kPi * kPi, 0.1, 10.0};
}

DensityReport einstein_density(double scalar_curvature, double volume,
                               double dimension) {
  if (!(scalar_curvature > 0.0))
    fail(errc::nonpositive_curvature,
         "Einstein density requires positive scalar curvature");
  if (!(volume > 0.0))
    fail(errc::nonpositive_volume, "volume must be positive");
  if (!(dimension > 0.0))
    fail(errc::invalid_argument, "dimension must be positive");

  const double theta =
      std::pow(scalar_curvature / (2.0 * kPi * dimension * kE),
               0.5 * dimension) *
      volume;
  DensityReport report;
  report.theta = theta;
  report.nu = std::log(theta);
  report.metric_label = "einstein";
  report.add("scalar_curvature", scalar_curvature);
  report.add("volume", volume);
  report.add("dimension", dimension);
  return report;
}

DensityReport conformal_density(TopologyInvariants topo, double c_min) {
  if (!(c_min >= 0.0))
    fail(errc::invalid_argument, "Calabi energy must be nonnegative");
  const double chern =
      2.0 * topo.euler_characteristic + 3.0 * topo.signature;
  const double theta = 1.5 * chern / (kE * kE) -
                       2.0 * c_min / ((8.0 * kPi * kE) * (8.0 * kPi * kE));
  if (!(theta > 0.0))
    fail(errc::nonpositive_density,
         "inputs give a nonpositive density; not a valid metric");
  DensityReport report;
  report.theta = theta;
  report.nu = std::log(theta);
  report.metric_label = "conformally-kahler-einstein";
  report.add("chi", topo.euler_characteristic);
  report.add("sigma", topo.signature);
  report.add("c_min", c_min);
  return report;
}

DensityReport conformal_density(TopologyInvariants topo,
                                const CalabiProfile& profile) {
  const MinimizationResult res = calabi_minimize(profile);
  DensityReport report = conformal_density(topo, profile.prefactor * res.value);
  report.add("calabi_argmin", res.argmin[0]);
  report.add("calabi_min", res.value);
  return report;
}

MinimizationResult calabi_minimize(const CalabiProfile& profile) {
  if (!(profile.prefactor > 0.0))
    fail(errc::invalid_argument, "profile prefactor must be positive");
  return minimize_rational(profile.rational, profile.bracket_lo,
                           profile.bracket_hi, 1e-10);
}

double calabi_cmin(const CalabiProfile& profile) {
  return profile.prefactor * calabi_minimize(profile).value;
}

LinearForm soliton_constant(const SolitonProblem& prob, double tol) {
  const Polytope& p = prob.polytope;
  if (prob.complex_dimension != p.dimension)
    fail(errc::invalid_argument,
         "complex dimension must match the polytope dimension");
  if (!origin_strictly_interior(p))
    fail(errc::invalid_argument,
         "moment constraint is unsatisfiable: the origin is not interior to "
         "the polytope");

  Eigen::VectorXd c;
  if (prob.symmetry_reduce) {
    const MinimizationResult res = minimize_convex_newton(
        diagonal_objective(p), Eigen::VectorXd::Zero(1), tol);
    c = Eigen::VectorXd::Constant(p.dimension, res.argmin[0]);
  } else {
    c = Eigen::VectorXd::Zero(p.dimension);
  }

  // The moment constraint must hold coordinate-wise; the reduced solve only
  // guarantees the sum, so fall through to the full Newton run if needed.
  const auto moments_vanish = [&](const Eigen::VectorXd& cc) {
    for (int i = 0; i < p.dimension; ++i)
      if (std::abs(polytope_moment1(p, scaled_form(cc, -1.0), i)) > tol)
        return false;
    return true;
  };
  if (!prob.symmetry_reduce || !moments_vanish(c)) {
    const MinimizationResult res =
        minimize_convex_newton(partition_objective(p), c, tol);
    c = res.argmin;
  }
  return LinearForm{c, 0.0};
}

double soliton_Z(const SolitonProblem& prob, const LinearForm& potential,
                 double beta) {
  if (!(beta > 0.0)) fail(errc::invalid_argument, "beta must be positive");
  const LinearForm integrand{-beta * potential.coefficients,
                             -beta * potential.offset};
  return std::exp(-prob.complex_dimension) *
         polytope_exp_integral(prob.polytope, integrand);
}

double soliton_S(const SolitonProblem& prob, const LinearForm& potential,
                 double beta) {
  if (!(beta > 0.0)) fail(errc::invalid_argument, "beta must be positive");
  const LinearForm integrand{-beta * potential.coefficients,
                             -beta * potential.offset};
  const double mass = polytope_exp_integral(prob.polytope, integrand);
  double mean_f = potential.offset;
  for (int i = 0; i < prob.polytope.dimension; ++i)
    mean_f += potential.coefficients[i] *
              polytope_moment1(prob.polytope, integrand, i) / mass;
  return std::log(soliton_Z(prob, potential, beta)) + beta * mean_f;
}

DensityReport soliton_density(const SolitonProblem& prob, double tol) {
  const LinearForm potential = soliton_constant(prob, tol);
  const Polytope& p = prob.polytope;

  const LinearForm integrand{-potential.coefficients, 0.0};
  const double min_integral = polytope_exp_integral(p, integrand);
  const double z1 = soliton_Z(prob, potential, 1.0);
  const double nu = soliton_S(prob, potential, 1.0);

  double moment_residual = 0.0;
  for (int i = 0; i < p.dimension; ++i)
    moment_residual = std::max(
        moment_residual, std::abs(polytope_moment1(p, integrand, i)));

  DensityReport report;
  report.nu = nu;
  report.theta = std::exp(nu);
  report.metric_label = "toric-kahler-ricci-soliton";
  for (int i = 0; i < p.dimension; ++i)
    report.add("c_" + std::to_string(i + 1), potential.coefficients[i]);
  const double c_spread = potential.coefficients.maxCoeff() -
                          potential.coefficients.minCoeff();
  if (c_spread <= 1e-6)
    report.add("soliton_constant", potential.coefficients[0]);
  report.add("min_integral", min_integral);
  report.add("Z1", z1);
  report.add("area", area(p));
  report.add("moment_residual", moment_residual);
  append_closed_form_intermediates(
      report, closed_form_check(p, potential.coefficients[0]));
  return report;
}

std::vector<DensityReport> canonical_table() {
  std::vector<DensityReport> rows;

  DensityReport koiso_cao =
      soliton_density(SolitonProblem{builtin("trapezium"), 2, true});
  koiso_cao.metric_label = "Koiso-Cao soliton";
  rows.push_back(std::move(koiso_cao));

  DensityReport page = conformal_density(TopologyInvariants{4, 0}, page_profile());
  page.metric_label = "Page metric";
  rows.push_back(std::move(page));

  DensityReport clbw =
      conformal_density(TopologyInvariants{5, -1}, clbw_profile());
  clbw.metric_label = "Chen-LeBrun-Weber metric";
  rows.push_back(std::move(clbw));

  DensityReport wang_zhu =
      soliton_density(SolitonProblem{builtin("pentagon"), 2, true});
  wang_zhu.metric_label = "Wang-Zhu soliton";
  rows.push_back(std::move(wang_zhu));

  return rows;
}

ClosedFormCheck closed_form_check(const Polytope& p, double c) {
  ClosedFormCheck check;
  const bool is_pentagon = same_vertex_set(p, builtin("pentagon"));
  const bool is_trapezium =
      !is_pentagon && same_vertex_set(p, builtin("trapezium"));
  if (!is_pentagon && !is_trapezium) return check;

  Eigen::VectorXd coeffs = Eigen::VectorXd::Constant(2, -c);
  check.has_reference = true;
  check.engine_value = polytope_exp_integral(p, LinearForm{coeffs, 0.0});
  if (is_pentagon) {
    check.reference_value = static_cast<double>(pentagon_closed_form(c));
    check.corrected_value = check.reference_value;
  } else {
    check.reference_value = static_cast<double>(trapezium_quoted_form(c));
    check.corrected_value = static_cast<double>(trapezium_corrected_form(c));
  }
  check.discrepancy = std::abs(check.engine_value - check.reference_value);
  check.reference_consistent =
      check.discrepancy <= 1e-8 * std::max(1.0, std::abs(check.engine_value));
  return check;
}

}  // namespace gdens
