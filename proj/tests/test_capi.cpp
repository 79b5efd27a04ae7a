// Exercises the shared-library surface only: no core headers here.
#include <cmath>
#include <string>

#include "doctest.h"
#include "gdens/gdens.h"
#include "json.hpp"

namespace {

struct PolytopeHandle {
  gdens_polytope* p = nullptr;
  ~PolytopeHandle() { gdens_polytope_free(p); }
};

struct ReportHandle {
  gdens_report* r = nullptr;
  ~ReportHandle() { gdens_report_free(r); }
};

double intermediate(const gdens_report* r, const std::string& name) {
  for (size_t i = 0; i < gdens_report_intermediate_count(r); ++i)
    if (name == gdens_report_intermediate_name(r, i))
      return gdens_report_intermediate_value(r, i);
  FAIL("missing intermediate ", name);
  return 0.0;
}

}  // namespace

TEST_CASE("builtin polytope handles") {
  PolytopeHandle h;
  REQUIRE(gdens_polytope_builtin("pentagon", &h.p) == GDENS_OK);
  CHECK(gdens_polytope_vertex_count(h.p) == 5);

  double x = 0, y = 0;
  REQUIRE(gdens_polytope_vertex(h.p, 0, &x, &y) == GDENS_OK);
  CHECK(x == -1.0);
  CHECK(y == -1.0);
  CHECK(gdens_polytope_vertex(h.p, 9, &x, &y) == GDENS_ERR_INVALID_ARGUMENT);

  double a = 0;
  REQUIRE(gdens_polytope_area(h.p, &a) == GDENS_OK);
  CHECK(a == doctest::Approx(3.5));

  double cx = 0, cy = 0;
  REQUIRE(gdens_polytope_centroid(h.p, &cx, &cy) == GDENS_OK);
  CHECK(cx == doctest::Approx(-2.0 / 21));

  gdens_polytope* bad = nullptr;
  CHECK(gdens_polytope_builtin("heptagon", &bad) == GDENS_ERR_UNKNOWN_NAME);
}

TEST_CASE("polytope creation and validation through the C API") {
  const double square[] = {-1, -1, 1, -1, 1, 1, -1, 1};
  PolytopeHandle h;
  REQUIRE(gdens_polytope_create(square, 4, &h.p) == GDENS_OK);
  double a = 0;
  REQUIRE(gdens_polytope_area(h.p, &a) == GDENS_OK);
  CHECK(a == doctest::Approx(4.0));

  const double bowtie[] = {0, 0, 2, 0, 1, 1, 1, -1};
  gdens_polytope* bad = nullptr;
  CHECK(gdens_polytope_create(bowtie, 4, &bad) == GDENS_ERR_NONCONVEX);
}

TEST_CASE("JSON loading via the C API") {
  PolytopeHandle h;
  char errmsg[128] = {0};
  REQUIRE(gdens_polytope_from_json(R"({"vertices": [[0,0],[1,0],[0,1]]})",
                                   &h.p, errmsg, sizeof errmsg) == GDENS_OK);
  CHECK(gdens_polytope_vertex_count(h.p) == 3);

  gdens_polytope* bad = nullptr;
  CHECK(gdens_polytope_from_json(R"({"nope": 1})", &bad, errmsg,
                                 sizeof errmsg) == GDENS_ERR_PARSE);
  CHECK(std::string(errmsg).find("vertices") != std::string::npos);
}

TEST_CASE("integrals and moments through the C API") {
  PolytopeHandle h;
  REQUIRE(gdens_polytope_builtin("pentagon", &h.p) == GDENS_OK);

  const double zero[2] = {0, 0};
  double v = 0;
  REQUIRE(gdens_polytope_exp_integral(h.p, zero, 2, 0.0, &v) == GDENS_OK);
  CHECK(v == doctest::Approx(3.5));

  const double c = 0.434748;  // integrand exp(c (x1 + x2))... sign as passed
  const double coeffs[2] = {c, c};
  REQUIRE(gdens_polytope_exp_integral(h.p, coeffs, 2, 0.0, &v) == GDENS_OK);
  CHECK(v == doctest::Approx(3.36094).epsilon(1e-5));

  REQUIRE(gdens_polytope_exp_moment1(h.p, zero, 2, 0.0, 0, &v) == GDENS_OK);
  CHECK(v == doctest::Approx(-1.0 / 3));

  CHECK(gdens_polytope_exp_integral(h.p, zero, 3, 0.0, &v) ==
        GDENS_ERR_INVALID_ARGUMENT);
}

TEST_CASE("profile evaluation and minimization") {
  double v = 0;
  REQUIRE(gdens_profile_eval(GDENS_PROFILE_CLBW, 0.0, &v) == GDENS_OK);
  CHECK(v == doctest::Approx(8.0));  // 3 * 32 / 12

  double c_min = 0, argmin = 0, minimum = 0;
  REQUIRE(gdens_profile_cmin(GDENS_PROFILE_PAGE, &c_min, &argmin, &minimum) ==
          GDENS_OK);
  CHECK(argmin == doctest::Approx(2.183933).epsilon(1e-6));
  CHECK(minimum == doctest::Approx(2.72621).epsilon(1e-5));
  CHECK(c_min == doctest::Approx(96 * 9.869604401089358 * 2.72621)
                     .epsilon(1e-5));
}

TEST_CASE("einstein and conformal routes") {
  ReportHandle s4;
  REQUIRE(gdens_einstein_density(12.0, 26.318945069571622, 4.0, &s4.r) ==
          GDENS_OK);
  CHECK(gdens_report_theta(s4.r) == doctest::Approx(0.81201).epsilon(1e-5));

  gdens_report* bad = nullptr;
  CHECK(gdens_einstein_density(-1.0, 1.0, 4.0, &bad) ==
        GDENS_ERR_NONPOSITIVE_CURVATURE);
  CHECK(gdens_einstein_density(1.0, -1.0, 4.0, &bad) ==
        GDENS_ERR_NONPOSITIVE_VOLUME);

  ReportHandle clbw;
  REQUIRE(gdens_conformal_density_profile(5, -1, GDENS_PROFILE_CLBW,
                                          &clbw.r) == GDENS_OK);
  CHECK(gdens_report_theta(clbw.r) == doctest::Approx(0.4552).epsilon(1e-4));

  CHECK(gdens_conformal_density(0, 0, 0.0, &bad) ==
        GDENS_ERR_NONPOSITIVE_DENSITY);
}

TEST_CASE("soliton route through the C API") {
  PolytopeHandle h;
  REQUIRE(gdens_polytope_builtin("pentagon", &h.p) == GDENS_OK);
  ReportHandle rep;
  REQUIRE(gdens_soliton_density(h.p, 2, 1e-10, 1, &rep.r) == GDENS_OK);
  CHECK(gdens_report_theta(rep.r) == doctest::Approx(0.4549).epsilon(1e-4));
  CHECK(gdens_report_nu(rep.r) ==
        doctest::Approx(std::log(gdens_report_theta(rep.r))).epsilon(1e-14));
  CHECK(std::string(gdens_report_label(rep.r)) == "toric-kahler-ricci-soliton");
  CHECK(intermediate(rep.r, "soliton_constant") ==
        doctest::Approx(-0.434748).epsilon(1e-5));
  CHECK(intermediate(rep.r, "closed_form_consistent") == 1.0);

  // dimension mismatch
  gdens_report* bad = nullptr;
  CHECK(gdens_soliton_density(h.p, 3, 1e-10, 1, &bad) ==
        GDENS_ERR_INVALID_ARGUMENT);
}

TEST_CASE("report JSON from the C API") {
  ReportHandle rep;
  REQUIRE(gdens_conformal_density(4, 0, 0.0, &rep.r) == GDENS_OK);
  char* text = gdens_report_to_json(rep.r);
  REQUIRE(text != nullptr);
  const auto doc = nlohmann::ordered_json::parse(text);
  CHECK(doc["metric_label"] == "conformally-kahler-einstein");
  CHECK(doc["theta"].get<double>() == gdens_report_theta(rep.r));
  CHECK(doc["intermediates"]["chi"].get<double>() == 4.0);
  gdens_string_free(text);
}

TEST_CASE("canonical table through the C API") {
  gdens_report* rows[4] = {nullptr, nullptr, nullptr, nullptr};
  REQUIRE(gdens_canonical_table(rows) == GDENS_OK);
  const double expected[4] = {0.5179, 0.5172, 0.4552, 0.4549};
  const char* labels[4] = {"Koiso-Cao soliton", "Page metric",
                           "Chen-LeBrun-Weber metric", "Wang-Zhu soliton"};
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(gdens_report_theta(rows[i]) - expected[i]) <= 5e-5);
    CHECK(std::string(gdens_report_label(rows[i])) == labels[i]);
    gdens_report_free(rows[i]);
  }
}

TEST_CASE("status messages") {
  CHECK(std::string(gdens_status_message(GDENS_OK)) == "ok");
  CHECK(std::string(gdens_status_message(GDENS_ERR_NONCONVEX)).size() > 0);
  CHECK(std::string(gdens_status_message(GDENS_ERR_INTERNAL)) ==
        "internal error");
}
