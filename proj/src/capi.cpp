#include "gdens/gdens.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "density.hpp"
#include "expint.hpp"
#include "geometry.hpp"
#include "report_json.hpp"

struct gdens_polytope {
  gdens::Polytope poly;
};

struct gdens_report {
  gdens::DensityReport report;
};

namespace {

static_assert(static_cast<int>(gdens::errc::invalid_argument) ==
              GDENS_ERR_INVALID_ARGUMENT);
static_assert(static_cast<int>(gdens::errc::parse_error) == GDENS_ERR_PARSE);

gdens_status to_status(gdens::errc code) {
  return static_cast<gdens_status>(static_cast<int>(code));
}

void copy_message(const char* message, char* buf, size_t cap) {
  if (buf == nullptr || cap == 0) return;
  std::strncpy(buf, message, cap - 1);
  buf[cap - 1] = '\0';
}

template <class F>
gdens_status guarded(F&& body, char* errmsg = nullptr, size_t errmsg_cap = 0) {
  try {
    body();
    return GDENS_OK;
  } catch (const gdens::Error& e) {
    copy_message(e.what(), errmsg, errmsg_cap);
    return to_status(e.code());
  } catch (const std::exception& e) {
    copy_message(e.what(), errmsg, errmsg_cap);
    return GDENS_ERR_INTERNAL;
  } catch (...) {
    copy_message("unknown failure", errmsg, errmsg_cap);
    return GDENS_ERR_INTERNAL;
  }
}

void wrap_report(gdens::DensityReport&& report, gdens_report** out) {
  *out = new gdens_report{std::move(report)};
}

gdens::CalabiProfile profile_by_id(gdens_profile profile) {
  switch (profile) {
    case GDENS_PROFILE_CLBW: return gdens::clbw_profile();
    case GDENS_PROFILE_PAGE: return gdens::page_profile();
  }
  gdens::fail(gdens::errc::unknown_name, "unknown Calabi profile id");
}

gdens::LinearForm make_form(const gdens_polytope* p, const double* coeffs,
                            size_t dim, double offset) {
  if (coeffs == nullptr)
    gdens::fail(gdens::errc::invalid_argument, "coefficients must not be NULL");
  if (static_cast<int>(dim) != p->poly.dimension)
    gdens::fail(gdens::errc::invalid_argument,
                "form dimension must match the polytope dimension");
  Eigen::VectorXd c(static_cast<Eigen::Index>(dim));
  for (size_t i = 0; i < dim; ++i) c[static_cast<Eigen::Index>(i)] = coeffs[i];
  return gdens::LinearForm{std::move(c), offset};
}

}  // namespace

extern "C" {

const char* gdens_status_message(gdens_status status) {
  if (status == GDENS_ERR_INTERNAL) return "internal error";
  return gdens::errc_message(static_cast<gdens::errc>(status));
}

gdens_status gdens_polytope_builtin(const char* name, gdens_polytope** out) {
  if (name == nullptr || out == nullptr) return GDENS_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = new gdens_polytope{gdens::builtin(name)}; });
}

gdens_status gdens_polytope_create(const double* xy, size_t vertex_count,
                                   gdens_polytope** out) {
  if (xy == nullptr || out == nullptr) return GDENS_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    std::vector<gdens::Point> pts;
    pts.reserve(vertex_count);
    for (size_t i = 0; i < vertex_count; ++i)
      pts.push_back(gdens::make_point(xy[2 * i], xy[2 * i + 1]));
    *out = new gdens_polytope{gdens::validate_polygon(pts)};
  });
}

gdens_status gdens_polytope_from_json(const char* text, gdens_polytope** out,
                                      char* errmsg, size_t errmsg_cap) {
  if (text == nullptr || out == nullptr) return GDENS_ERR_INVALID_ARGUMENT;
  return guarded(
      [&] { *out = new gdens_polytope{gdens::load_polytope_json(text)}; },
      errmsg, errmsg_cap);
}

void gdens_polytope_free(gdens_polytope* p) { delete p; }

size_t gdens_polytope_vertex_count(const gdens_polytope* p) {
  return p == nullptr ? 0 : p->poly.vertices.size();
}

gdens_status gdens_polytope_vertex(const gdens_polytope* p, size_t index,
                                   double* x, double* y) {
  if (p == nullptr || x == nullptr || y == nullptr)
    return GDENS_ERR_INVALID_ARGUMENT;
  if (index >= p->poly.vertices.size()) return GDENS_ERR_INVALID_ARGUMENT;
  *x = p->poly.vertices[index][0];
  *y = p->poly.vertices[index][1];
  return GDENS_OK;
}

gdens_status gdens_polytope_area(const gdens_polytope* p, double* out) {
  if (p == nullptr || out == nullptr) return GDENS_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = gdens::area(p->poly); });
}

gdens_status gdens_polytope_centroid(const gdens_polytope* p, double* x,
                                     double* y) {
  if (p == nullptr || x == nullptr || y == nullptr)
    return GDENS_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const gdens::Point c = gdens::centroid(p->poly);
    *x = c[0];
    *y = c[1];
  });
}

gdens_status gdens_polytope_exp_integral(const gdens_polytope* p,
                                         const double* coeffs, size_t dim,
                                         double offset, double* out) {
  if (p == nullptr || out == nullptr) return GDENS_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = gdens::polytope_exp_integral(p->poly,
                                        make_form(p, coeffs, dim, offset));
  });
}

gdens_status gdens_polytope_exp_moment1(const gdens_polytope* p,
                                        const double* coeffs, size_t dim,
                                        double offset, size_t axis,
                                        double* out) {
  if (p == nullptr || out == nullptr) return GDENS_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = gdens::polytope_moment1(p->poly, make_form(p, coeffs, dim, offset),
                                   static_cast<int>(axis));
  });
}

gdens_status gdens_profile_eval(gdens_profile profile, double x, double* out) {
  if (out == nullptr) return GDENS_ERR_INVALID_ARGUMENT;
  return guarded([&] { *out = profile_by_id(profile).rational(x); });
}

gdens_status gdens_profile_cmin(gdens_profile profile, double* c_min,
                                double* argmin, double* minimum) {
  if (c_min == nullptr) return GDENS_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const gdens::CalabiProfile prof = profile_by_id(profile);
    const gdens::MinimizationResult res = gdens::calabi_minimize(prof);
    *c_min = prof.prefactor * res.value;
    if (argmin != nullptr) *argmin = res.argmin[0];
    if (minimum != nullptr) *minimum = res.value;
  });
}

void gdens_report_free(gdens_report* r) { delete r; }

double gdens_report_theta(const gdens_report* r) {
  return r == nullptr ? 0.0 : r->report.theta;
}

double gdens_report_nu(const gdens_report* r) {
  return r == nullptr ? 0.0 : r->report.nu;
}

const char* gdens_report_label(const gdens_report* r) {
  return r == nullptr ? "" : r->report.metric_label.c_str();
}

size_t gdens_report_intermediate_count(const gdens_report* r) {
  return r == nullptr ? 0 : r->report.intermediates.size();
}

const char* gdens_report_intermediate_name(const gdens_report* r,
                                           size_t index) {
  if (r == nullptr || index >= r->report.intermediates.size()) return nullptr;
  return r->report.intermediates[index].first.c_str();
}

double gdens_report_intermediate_value(const gdens_report* r, size_t index) {
  if (r == nullptr || index >= r->report.intermediates.size()) return 0.0;
  return r->report.intermediates[index].second;
}

char* gdens_report_to_json(const gdens_report* r) {
  if (r == nullptr) return nullptr;
  try {
    const std::string text = gdens::report_to_json(r->report);
    char* buf = static_cast<char*>(std::malloc(text.size() + 1));
    if (buf == nullptr) return nullptr;
    std::memcpy(buf, text.c_str(), text.size() + 1);
    return buf;
  } catch (...) {
    return nullptr;
  }
}

void gdens_string_free(char* s) { std::free(s); }

gdens_status gdens_einstein_density(double scalar_curvature, double volume,
                                    double dim, gdens_report** out) {
  if (out == nullptr) return GDENS_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    gdens::DensityReport rep =
        gdens::einstein_density(scalar_curvature, volume, dim);
    wrap_report(std::move(rep), out);
  });
}

gdens_status gdens_conformal_density(int chi, int sigma, double c_min,
                                     gdens_report** out) {
  if (out == nullptr) return GDENS_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    gdens::DensityReport rep =
        gdens::conformal_density(gdens::TopologyInvariants{chi, sigma}, c_min);
    wrap_report(std::move(rep), out);
  });
}

gdens_status gdens_conformal_density_profile(int chi, int sigma,
                                             gdens_profile profile,
                                             gdens_report** out) {
  if (out == nullptr) return GDENS_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    gdens::DensityReport rep = gdens::conformal_density(
        gdens::TopologyInvariants{chi, sigma}, profile_by_id(profile));
    wrap_report(std::move(rep), out);
  });
}

gdens_status gdens_soliton_density(const gdens_polytope* p, int complex_dim,
                                   double tol, int symmetry_reduce,
                                   gdens_report** out) {
  if (p == nullptr || out == nullptr) return GDENS_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    gdens::SolitonProblem prob{p->poly, complex_dim, symmetry_reduce != 0};
    wrap_report(gdens::soliton_density(prob, tol), out);
  });
}

gdens_status gdens_canonical_table(gdens_report* out[4]) {
  if (out == nullptr) return GDENS_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    std::vector<gdens::DensityReport> rows = gdens::canonical_table();
    for (int i = 0; i < 4; ++i)
      out[i] = new gdens_report{std::move(rows[static_cast<size_t>(i)])};
  });
}

}  // extern "C"
