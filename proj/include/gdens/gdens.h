/*
 * gdens — Gaussian densities of canonical metrics on complex surfaces.
 *
 * C interface of the shared library. Objects are opaque handles created and
 * destroyed here; every fallible call returns a gdens_status and writes its
 * result through out-parameters. Handles are immutable after creation and
 * safe to use from multiple threads.
 */
#ifndef GDENS_H
#define GDENS_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gdens_status {
  GDENS_OK = 0,
  GDENS_ERR_INVALID_ARGUMENT = 1,
  GDENS_ERR_DEGENERATE_INPUT = 2,
  GDENS_ERR_NONCONVEX = 3,
  GDENS_ERR_UNKNOWN_NAME = 4,
  GDENS_ERR_UNSUPPORTED_DIMENSION = 5,
  GDENS_ERR_BAD_BRACKET = 6,
  GDENS_ERR_POLE_IN_BRACKET = 7,
  GDENS_ERR_NO_CONVERGENCE = 8,
  GDENS_ERR_SINGULAR_HESSIAN = 9,
  GDENS_ERR_NONPOSITIVE_CURVATURE = 10,
  GDENS_ERR_NONPOSITIVE_VOLUME = 11,
  GDENS_ERR_NONPOSITIVE_DENSITY = 12,
  GDENS_ERR_PARSE = 13,
  GDENS_ERR_INTERNAL = 14
} gdens_status;

/* Static description of a status code. */
const char* gdens_status_message(gdens_status status);

/* ---- polytopes ------------------------------------------------------- */

typedef struct gdens_polytope gdens_polytope;

/* name: "pentagon", "trapezium" or "square". */
gdens_status gdens_polytope_builtin(const char* name, gdens_polytope** out);

/* xy: vertex_count pairs (x0, y0, x1, y1, ...) forming a convex cycle in
 * either orientation; normalized to counter-clockwise. */
gdens_status gdens_polytope_create(const double* xy, size_t vertex_count,
                                   gdens_polytope** out);

/* Parses {"vertices": [[x, y], ...]}. On failure, a short message naming
 * the offending field is copied into errmsg (when non-NULL). */
gdens_status gdens_polytope_from_json(const char* text, gdens_polytope** out,
                                      char* errmsg, size_t errmsg_cap);

void gdens_polytope_free(gdens_polytope* p);

size_t gdens_polytope_vertex_count(const gdens_polytope* p);
gdens_status gdens_polytope_vertex(const gdens_polytope* p, size_t index,
                                   double* x, double* y);
gdens_status gdens_polytope_area(const gdens_polytope* p, double* out);
gdens_status gdens_polytope_centroid(const gdens_polytope* p, double* x,
                                     double* y);

/* Exact integral of exp(<coeffs, x> + offset) over the polytope; dim must
 * equal the polytope dimension (2). */
gdens_status gdens_polytope_exp_integral(const gdens_polytope* p,
                                         const double* coeffs, size_t dim,
                                         double offset, double* out);

/* Exact integral of x_axis * exp(<coeffs, x> + offset); axis is zero-based. */
gdens_status gdens_polytope_exp_moment1(const gdens_polytope* p,
                                        const double* coeffs, size_t dim,
                                        double offset, size_t axis,
                                        double* out);

/* ---- Calabi-energy profiles ------------------------------------------ */

typedef enum gdens_profile {
  GDENS_PROFILE_CLBW = 0, /* CP^2 # 2CP^2-bar, prefactor 32 pi^2 */
  GDENS_PROFILE_PAGE = 1  /* CP^2 # CP^2-bar,  prefactor 96 pi^2 */
} gdens_profile;

gdens_status gdens_profile_eval(gdens_profile profile, double x, double* out);

/* c_min = prefactor * minimum; argmin and minimum may be NULL. */
gdens_status gdens_profile_cmin(gdens_profile profile, double* c_min,
                                double* argmin, double* minimum);

/* ---- density reports -------------------------------------------------- */

typedef struct gdens_report gdens_report;

void gdens_report_free(gdens_report* r);
double gdens_report_theta(const gdens_report* r);
double gdens_report_nu(const gdens_report* r);
const char* gdens_report_label(const gdens_report* r);
size_t gdens_report_intermediate_count(const gdens_report* r);
const char* gdens_report_intermediate_name(const gdens_report* r,
                                           size_t index);
double gdens_report_intermediate_value(const gdens_report* r, size_t index);

/* JSON object with keys metric_label, theta, nu, intermediates. The string
 * is malloc'd; release it with gdens_string_free. */
char* gdens_report_to_json(const gdens_report* r);
void gdens_string_free(char* s);

/* ---- the three routes -------------------------------------------------- */

/* Einstein closed form; dim is the real dimension. */
gdens_status gdens_einstein_density(double scalar_curvature, double volume,
                                    double dim, gdens_report** out);

/* Conformally Kahler, Einstein formula from Euler characteristic,
 * signature and the Calabi energy c_min of the extremal metric. */
gdens_status gdens_conformal_density(int chi, int sigma, double c_min,
                                     gdens_report** out);

/* Same, minimizing the named profile for c_min. */
gdens_status gdens_conformal_density_profile(int chi, int sigma,
                                             gdens_profile profile,
                                             gdens_report** out);

/* Toric Kahler-Ricci soliton route over a moment polytope.
 * symmetry_reduce != 0 restricts the soliton constant to c * (1, ..., 1)
 * first (moment constraints are verified either way). */
gdens_status gdens_soliton_density(const gdens_polytope* p, int complex_dim,
                                   double tol, int symmetry_reduce,
                                   gdens_report** out);

/* The four canonical metrics in table order: Koiso-Cao soliton, Page
 * metric, Chen-LeBrun-Weber metric, Wang-Zhu soliton. Fills out[0..3];
 * each report must be freed. */
gdens_status gdens_canonical_table(gdens_report* out[4]);

#ifdef __cplusplus
}
#endif

#endif /* GDENS_H */
