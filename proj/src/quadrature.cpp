#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "expint.hpp"

namespace gdens {

namespace {

constexpr int kGaussOrder = 8;
constexpr int kMaxRefinements = 8;

struct GaussRule {
  std::array<double, kGaussOrder> x;  // nodes on [0,1]
  std::array<double, kGaussOrder> w;
};

// Gauss-Legendre nodes by Newton iteration on P_n; mapped to [0,1].
GaussRule make_gauss_rule() {
  GaussRule rule{};
  const int n = kGaussOrder;
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.x[i] = 0.5 * (x + 1.0);
    rule.w[i] = 1.0 / ((1.0 - x * x) * dp * dp);  // = (2/((1-x^2)P'^2)) / 2
  }
  return rule;
}

const GaussRule& gauss_rule() {
  static const GaussRule rule = make_gauss_rule();
  return rule;
}

struct Tri {
  Eigen::Vector2d a, b, c;
};

double tri_area(const Tri& t) {
  const Eigen::Vector2d u = t.b - t.a, v = t.c - t.a;
  return 0.5 * std::abs(u.x() * v.y() - u.y() * v.x());
}

// Tensor Gauss rule through the collapsed-square map, averaged over the
// three corner collapses so the rule is symmetric in the triangle vertices.
template <class F>
double tri_integrate(const Tri& t, const F& f) {
  const GaussRule& g = gauss_rule();
  const Eigen::Vector2d* corners[3] = {&t.a, &t.b, &t.c};
  double acc = 0.0;
  for (int rot = 0; rot < 3; ++rot) {
    const Eigen::Vector2d& p0 = *corners[rot];
    const Eigen::Vector2d& p1 = *corners[(rot + 1) % 3];
    const Eigen::Vector2d& p2 = *corners[(rot + 2) % 3];
    for (int i = 0; i < kGaussOrder; ++i) {
      const double u = g.x[i];
      for (int j = 0; j < kGaussOrder; ++j) {
        const double v = g.x[j];
        const Eigen::Vector2d x =
            p0 * (1.0 - u) + p1 * (u * (1.0 - v)) + p2 * (u * v);
        acc += g.w[i] * g.w[j] * u * f(x);
      }
    }
  }
  return acc * (2.0 * tri_area(t)) / 3.0;
}

std::vector<Tri> split4(const std::vector<Tri>& tris) {
  std::vector<Tri> out;
  out.reserve(tris.size() * 4);
  for (const Tri& t : tris) {
    const Eigen::Vector2d ab = 0.5 * (t.a + t.b);
    const Eigen::Vector2d bc = 0.5 * (t.b + t.c);
    const Eigen::Vector2d ca = 0.5 * (t.c + t.a);
    out.push_back({t.a, ab, ca});
    out.push_back({ab, t.b, bc});
    out.push_back({ca, bc, t.c});
    out.push_back({ab, bc, ca});
  }
  return out;
}

}  // namespace

double quadrature_oracle(const Polytope& p, const LinearForm& form,
                         const std::vector<int>& monomial, double tol) {
  if (!(tol > 0.0)) fail(errc::invalid_argument, "tolerance must be positive");
  if (form.coefficients.size() != p.dimension)
    fail(errc::invalid_argument, "linear form dimension mismatch");
  if (static_cast<int>(monomial.size()) != p.dimension)
    fail(errc::invalid_argument, "monomial must have one exponent per axis");
  int degree = 0;
  for (int e : monomial) {
    if (e < 0) fail(errc::invalid_argument, "monomial exponents must be >= 0");
    degree += e;
  }
  if (degree > 2)
    fail(errc::invalid_argument, "monomial degree above 2 is unsupported");

  const Eigen::Vector2d coeff(form.coefficients[0], form.coefficients[1]);
  const double offset = form.offset;
  const auto integrand = [&](const Eigen::Vector2d& x) {
    double mono = 1.0;
    for (int k = 0; k < monomial[0]; ++k) mono *= x.x();
    for (int k = 0; k < monomial[1]; ++k) mono *= x.y();
    return mono * std::exp(coeff.dot(x) + offset);
  };

  std::vector<Tri> tris;
  for (const Simplex& s : triangulate(p))
    tris.push_back({Eigen::Vector2d(s.vertices[0][0], s.vertices[0][1]),
                    Eigen::Vector2d(s.vertices[1][0], s.vertices[1][1]),
                    Eigen::Vector2d(s.vertices[2][0], s.vertices[2][1])});

  const auto level_sum = [&](const std::vector<Tri>& ts) {
    double acc = 0.0;
    for (const Tri& t : ts) acc += tri_integrate(t, integrand);
    return acc;
  };

  double prev = level_sum(tris);
  for (int level = 1; level <= kMaxRefinements; ++level) {
    tris = split4(tris);
    const double cur = level_sum(tris);
    if (std::abs(cur - prev) < tol * std::max(1.0, std::abs(cur))) return cur;
    prev = cur;
  }
  fail(errc::no_convergence,
       "quadrature refinement budget exhausted before reaching tolerance");
}

}  // namespace gdens
