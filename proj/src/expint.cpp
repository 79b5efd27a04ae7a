#include "expint.hpp"

#include <algorithm>
#include <cmath>

namespace gdens {

namespace {

using LongMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;

long double dd_exp_impl(std::vector<long double> t) {
  std::sort(t.begin(), t.end());
  const Eigen::Index n = static_cast<Eigen::Index>(t.size());
  if (n == 1) return expl(t.front());

  const long double mu = 0.5L * (t.front() + t.back());
  const long double spread = t.back() - t.front();

  int squarings = 0;
  if (spread > 0.5L)
    squarings = static_cast<int>(std::ceil(std::log2(double(spread) / 0.5)));
  const long double scale = ldexpl(1.0L, -squarings);

  LongMatrix A = LongMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    A(i, i) = (t[static_cast<std::size_t>(i)] - mu) * scale;
    if (i + 1 < n) A(i, i + 1) = scale;
  }

  LongMatrix F = LongMatrix::Identity(n, n);
  LongMatrix term = LongMatrix::Identity(n, n);
  for (int p = 1; p <= 160; ++p) {
    term = (term * A) / static_cast<long double>(p);
    F += term;
    if (term.cwiseAbs().maxCoeff() <= 1e-24L * F.cwiseAbs().maxCoeff()) break;
  }
  for (int s = 0; s < squarings; ++s) F = F * F;

  return expl(mu) * F(0, n - 1);
}

double factorial(int d) {
  double f = 1.0;
  for (int i = 2; i <= d; ++i) f *= i;
  return f;
}

std::vector<long double> flatten(const NodeList& nodes) {
  if (nodes.values.empty() || nodes.values.size() != nodes.multiplicities.size())
    fail(errc::invalid_argument, "node values and multiplicities must pair up");
  std::vector<long double> t;
  for (std::size_t i = 0; i < nodes.values.size(); ++i) {
    if (!std::isfinite(nodes.values[i]))
      fail(errc::invalid_argument, "node values must be finite");
    if (nodes.multiplicities[i] < 1)
      fail(errc::invalid_argument, "node multiplicities must be >= 1");
    t.insert(t.end(), static_cast<std::size_t>(nodes.multiplicities[i]),
             static_cast<long double>(nodes.values[i]));
  }
  return t;
}

void check_form(const Polytope& p, const LinearForm& form) {
  if (form.coefficients.size() != p.dimension)
    fail(errc::invalid_argument, "linear form dimension mismatch");
  if (!form.coefficients.allFinite() || !std::isfinite(form.offset))
    fail(errc::invalid_argument, "linear form must be finite");
}

// exp[t_0,...,t_d, extra...] over one simplex, nodes taken from the linear
// part of the form at the vertices.
long double simplex_dd(const Simplex& s, const LinearForm& form,
                       std::initializer_list<std::size_t> doubled) {
  std::vector<long double> t;
  t.reserve(s.vertices.size() + doubled.size());
  for (const Point& v : s.vertices)
    t.push_back(static_cast<long double>(form.linear_part(v)));
  for (std::size_t j : doubled) t.push_back(t[j]);
  return dd_exp_impl(std::move(t));
}

}  // namespace

double dd_exp(const NodeList& nodes) {
  return static_cast<double>(dd_exp_impl(flatten(nodes)));
}

double simplex_exp_integral(const Simplex& s, const LinearForm& form) {
  const int d = static_cast<int>(s.vertices.size()) - 1;
  if (d < 1 || s.signed_volume == 0.0)
    fail(errc::invalid_argument, "degenerate simplex");
  const double base = factorial(d) * std::abs(s.signed_volume);
  return base * static_cast<double>(simplex_dd(s, form, {})) *
         std::exp(form.offset);
}

double polytope_exp_integral(const Polytope& p, const LinearForm& form) {
  check_form(p, form);
  long double acc = 0.0L;
  for (const Simplex& s : triangulate(p))
    acc += 2.0L * static_cast<long double>(std::abs(s.signed_volume)) *
           simplex_dd(s, form, {});
  return static_cast<double>(acc) * std::exp(form.offset);
}

double polytope_moment1(const Polytope& p, const LinearForm& form, int axis) {
  check_form(p, form);
  if (axis < 0 || axis >= p.dimension)
    fail(errc::invalid_argument, "moment axis out of range");
  long double acc = 0.0L;
  for (const Simplex& s : triangulate(p)) {
    const long double base = 2.0L * std::abs(s.signed_volume);
    for (std::size_t j = 0; j < s.vertices.size(); ++j)
      acc += base * static_cast<long double>(s.vertices[j][axis]) *
             simplex_dd(s, form, {j});
  }
  return static_cast<double>(acc) * std::exp(form.offset);
}

double polytope_moment2(const Polytope& p, const LinearForm& form, int axis_i,
                        int axis_j) {
  check_form(p, form);
  if (axis_i < 0 || axis_i >= p.dimension || axis_j < 0 ||
      axis_j >= p.dimension)
    fail(errc::invalid_argument, "moment axis out of range");
  long double acc = 0.0L;
  for (const Simplex& s : triangulate(p)) {
    const long double base = 2.0L * std::abs(s.signed_volume);
    const std::size_t m = s.vertices.size();
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = a; b < m; ++b) {
        const long double dd = simplex_dd(s, form, {a, b});
        const double va_i = s.vertices[a][axis_i];
        const double va_j = s.vertices[a][axis_j];
        const double vb_i = s.vertices[b][axis_i];
        const double vb_j = s.vertices[b][axis_j];
        if (a == b)
          acc += base * 2.0L * va_i * va_j * dd;
        else
          acc += base * (va_i * vb_j + vb_i * va_j) * dd;
      }
    }
  }
  return static_cast<double>(acc) * std::exp(form.offset);
}

}  // namespace gdens
