// gdens — command-line front end over the shared-library C API.
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gdens/gdens.h"
#include "json.hpp"

namespace {

// Shortest round-trip rendering; locale independent.
std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// Fixed four decimals, ties to even.
std::string fmt4(double v) {
  long long q = std::llrint(v * 10000.0);
  const bool neg = q < 0;
  if (neg) q = -q;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s%lld.%04lld", neg ? "-" : "", q / 10000,
                q % 10000);
  return buf;
}

// 1: the inputs failed validation; 2: the computation could not produce a
// valid result.
int exit_code_for(gdens_status status) {
  switch (status) {
    case GDENS_OK:
      return 0;
    case GDENS_ERR_INVALID_ARGUMENT:
    case GDENS_ERR_DEGENERATE_INPUT:
    case GDENS_ERR_NONCONVEX:
    case GDENS_ERR_UNKNOWN_NAME:
    case GDENS_ERR_UNSUPPORTED_DIMENSION:
    case GDENS_ERR_PARSE:
    case GDENS_ERR_NONPOSITIVE_CURVATURE:
    case GDENS_ERR_NONPOSITIVE_VOLUME:
      return 1;
    default:
      return 2;
  }
}

int compute_failed(gdens_status status) {
  std::fprintf(stderr, "error: %s\n", gdens_status_message(status));
  return exit_code_for(status);
}

int invalid_usage(const std::string& message) {
  std::fprintf(stderr, "error: %s\n", message.c_str());
  return 1;
}

bool find_intermediate(const gdens_report* r, const std::string& name,
                       double* out) {
  for (size_t i = 0; i < gdens_report_intermediate_count(r); ++i)
    if (name == gdens_report_intermediate_name(r, i)) {
      *out = gdens_report_intermediate_value(r, i);
      return true;
    }
  return false;
}

int print_report_json(const gdens_report* r) {
  char* text = gdens_report_to_json(r);
  if (text == nullptr) return compute_failed(GDENS_ERR_INTERNAL);
  std::printf("%s\n", text);
  gdens_string_free(text);
  return 0;
}

void print_report_text(const gdens_report* r) {
  std::printf("metric = %s\n", gdens_report_label(r));
  for (size_t i = 0; i < gdens_report_intermediate_count(r); ++i)
    std::printf("%s = %s\n", gdens_report_intermediate_name(r, i),
                fmt(gdens_report_intermediate_value(r, i)).c_str());
  std::printf("nu = %s\n", fmt(gdens_report_nu(r)).c_str());
  std::printf("theta = %s\n", fmt(gdens_report_theta(r)).c_str());
}

void print_closed_form_diagnostic(const gdens_report* r) {
  double engine = 0, reference = 0, corrected = 0, consistent = 0;
  if (!find_intermediate(r, "closed_form_engine", &engine)) return;
  find_intermediate(r, "closed_form_reference", &reference);
  find_intermediate(r, "closed_form_corrected", &corrected);
  find_intermediate(r, "closed_form_consistent", &consistent);
  if (consistent != 0.0) {
    std::printf(
        "closed-form check: quoted formula gives %s; consistent with the "
        "direct integral %s\n",
        fmt(reference).c_str(), fmt(engine).c_str());
  } else {
    std::printf(
        "closed-form check: quoted formula gives %s but the direct integral "
        "is %s; MISMATCH (diff = %s). Rederived formula gives %s, which "
        "agrees.\n",
        fmt(reference).c_str(), fmt(engine).c_str(),
        fmt(std::abs(reference - engine)).c_str(), fmt(corrected).c_str());
  }
}

struct TableRowMeta {
  const char* manifold;
  const char* type;
};

constexpr TableRowMeta kTableMeta[4] = {
    {"CP^2 # CP^2-bar", "Kahler-Ricci soliton"},
    {"CP^2 # CP^2-bar", "Einstein"},
    {"CP^2 # 2CP^2-bar", "Einstein"},
    {"CP^2 # 2CP^2-bar", "Kahler-Ricci soliton"},
};

int run_table(bool as_json) {
  gdens_report* rows[4] = {};
  const gdens_status st = gdens_canonical_table(rows);
  if (st != GDENS_OK) return compute_failed(st);

  int rc = 0;
  if (as_json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (int i = 0; i < 4 && rc == 0; ++i) {
      char* text = gdens_report_to_json(rows[i]);
      if (text == nullptr) {
        rc = compute_failed(GDENS_ERR_INTERNAL);
        break;
      }
      arr.push_back(nlohmann::ordered_json::parse(text));
      gdens_string_free(text);
    }
    if (rc == 0) std::printf("%s\n", arr.dump(2).c_str());
  } else {
    std::printf("%-18s%-26s%-22s%s\n", "manifold", "metric", "type", "theta");
    for (int i = 0; i < 4; ++i)
      std::printf("%-18s%-26s%-22s%s\n", kTableMeta[i].manifold,
                  gdens_report_label(rows[i]), kTableMeta[i].type,
                  fmt4(gdens_report_theta(rows[i])).c_str());
  }
  for (gdens_report* r : rows) gdens_report_free(r);
  return rc;
}

int emit_report(gdens_report* r, bool as_json, bool with_diagnostic) {
  int rc = 0;
  if (as_json) {
    rc = print_report_json(r);
  } else {
    print_report_text(r);
    if (with_diagnostic) print_closed_form_diagnostic(r);
  }
  gdens_report_free(r);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Gaussian density of canonical metrics on complex surfaces "
      "(Koiso-Cao, Page, Chen-LeBrun-Weber, Wang-Zhu)"};
  app.require_subcommand(1);

  // table
  bool table_json = false;
  CLI::App* table = app.add_subcommand(
      "table", "Reproduce the reference table of all four densities");
  table->add_flag("--json", table_json, "emit the four reports as JSON");

  // einstein
  double scalar_curvature = 0, volume = 0, dim = 0;
  bool einstein_json = false;
  CLI::App* einstein = app.add_subcommand(
      "einstein", "Einstein closed form from scalar curvature and volume");
  einstein->add_option("--scalar-curvature", scalar_curvature,
                       "scalar curvature R > 0")->required();
  einstein->add_option("--volume", volume, "Riemannian volume > 0")->required();
  einstein->add_option("--dim", dim, "real dimension n")->required();
  einstein->add_flag("--json", einstein_json, "emit the report as JSON");

  // conformal
  int chi = 0, sigma = 0;
  double c_min = -1.0;
  std::string profile_name;
  bool conformal_json = false;
  CLI::App* conformal = app.add_subcommand(
      "conformal", "Conformally Kahler, Einstein formula");
  conformal->add_option("--chi", chi, "Euler characteristic")->required();
  conformal->add_option("--sigma", sigma, "signature")->required();
  CLI::Option* opt_profile =
      conformal->add_option("--calabi-profile", profile_name,
                            "Calabi profile: clbw or page");
  CLI::Option* opt_cmin = conformal->add_option(
      "--c-min", c_min, "Calabi energy of the extremal metric");
  opt_profile->excludes(opt_cmin);
  opt_cmin->excludes(opt_profile);
  conformal->add_flag("--json", conformal_json, "emit the report as JSON");

  // soliton
  std::string polytope_name, polytope_file;
  int dim_complex = 2;
  double tol = 1e-10;
  bool no_symmetry_reduce = false, soliton_json = false;
  CLI::App* soliton = app.add_subcommand(
      "soliton", "Toric Kahler-Ricci soliton route over a moment polytope");
  CLI::Option* opt_name = soliton->add_option(
      "--polytope", polytope_name, "built-in: pentagon, trapezium or square");
  CLI::Option* opt_file = soliton->add_option(
      "--polytope-file", polytope_file,
      "JSON file {\"vertices\": [[x, y], ...]}");
  opt_name->excludes(opt_file);
  opt_file->excludes(opt_name);
  soliton->add_option("--dim-complex", dim_complex, "complex dimension")
      ->default_val(2);
  soliton->add_option("--tol", tol, "moment-constraint tolerance")
      ->default_val(1e-10);
  soliton->add_flag("--no-symmetry-reduce", no_symmetry_reduce,
                    "solve the full-dimensional problem directly");
  soliton->add_flag("--json", soliton_json, "emit the report as JSON");

  // scan
  std::string target;
  double from = 0, to = 0;
  int steps = 0;
  CLI::App* scan = app.add_subcommand(
      "scan", "Emit CSV samples x,value of a named curve");
  scan->add_option("--target", target,
                   "F-pentagon, F-trapezium, calabi-f or calabi-h")
      ->required();
  scan->add_option("--from", from, "first sample point")->required();
  scan->add_option("--to", to, "last sample point")->required();
  scan->add_option("--steps", steps, "number of samples (>= 2), inclusive")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (table->parsed()) return run_table(table_json);

  if (einstein->parsed()) {
    gdens_report* r = nullptr;
    const gdens_status st =
        gdens_einstein_density(scalar_curvature, volume, dim, &r);
    if (st != GDENS_OK) return compute_failed(st);
    return emit_report(r, einstein_json, false);
  }

  if (conformal->parsed()) {
    gdens_report* r = nullptr;
    gdens_status st = GDENS_OK;
    if (!profile_name.empty()) {
      gdens_profile profile;
      if (profile_name == "clbw") {
        profile = GDENS_PROFILE_CLBW;
      } else if (profile_name == "page") {
        profile = GDENS_PROFILE_PAGE;
      } else {
        return invalid_usage("unknown --calabi-profile \"" + profile_name +
                             "\" (expected clbw or page)");
      }
      st = gdens_conformal_density_profile(chi, sigma, profile, &r);
    } else if (opt_cmin->count() > 0) {
      st = gdens_conformal_density(chi, sigma, c_min, &r);
    } else {
      return invalid_usage(
          "conformal needs exactly one of --calabi-profile or --c-min");
    }
    if (st != GDENS_OK) return compute_failed(st);
    return emit_report(r, conformal_json, false);
  }

  if (soliton->parsed()) {
    gdens_polytope* p = nullptr;
    bool is_builtin = false;
    if (!polytope_name.empty()) {
      const gdens_status st = gdens_polytope_builtin(polytope_name.c_str(), &p);
      if (st != GDENS_OK)
        return invalid_usage("unknown --polytope \"" + polytope_name + '"');
      is_builtin = true;
    } else if (!polytope_file.empty()) {
      std::ifstream in(polytope_file);
      if (!in)
        return invalid_usage("cannot open polytope file " + polytope_file);
      std::ostringstream buffer;
      buffer << in.rdbuf();
      char errmsg[256] = {0};
      const gdens_status st = gdens_polytope_from_json(
          buffer.str().c_str(), &p, errmsg, sizeof errmsg);
      if (st != GDENS_OK)
        return invalid_usage("invalid polytope file " + polytope_file + ": " +
                             errmsg);
    } else {
      return invalid_usage(
          "soliton needs exactly one of --polytope or --polytope-file");
    }

    // symmetry reduction defaults on for the built-in domains only
    const int reduce = no_symmetry_reduce ? 0 : (is_builtin ? 1 : 0);
    gdens_report* r = nullptr;
    const gdens_status st =
        gdens_soliton_density(p, dim_complex, tol, reduce, &r);
    gdens_polytope_free(p);
    if (st != GDENS_OK) return compute_failed(st);
    return emit_report(r, soliton_json, true);
  }

  if (scan->parsed()) {
    if (steps < 2) return invalid_usage("--steps must be at least 2");

    gdens_polytope* p = nullptr;
    gdens_profile profile = GDENS_PROFILE_CLBW;
    bool use_polytope = false;
    if (target == "F-pentagon" || target == "F-trapezium") {
      const char* name = target == "F-pentagon" ? "pentagon" : "trapezium";
      if (gdens_polytope_builtin(name, &p) != GDENS_OK)
        return compute_failed(GDENS_ERR_INTERNAL);
      use_polytope = true;
    } else if (target == "calabi-f") {
      profile = GDENS_PROFILE_CLBW;
    } else if (target == "calabi-h") {
      profile = GDENS_PROFILE_PAGE;
    } else {
      return invalid_usage("unknown --target \"" + target + '"');
    }

    std::printf("x,value\n");
    for (int j = 0; j < steps; ++j) {
      const double x = from + (to - from) * j / (steps - 1);
      double value = 0;
      gdens_status st;
      if (use_polytope) {
        const double coeffs[2] = {-x, -x};
        st = gdens_polytope_exp_integral(p, coeffs, 2, 0.0, &value);
      } else {
        st = gdens_profile_eval(profile, x, &value);
      }
      if (st != GDENS_OK) {
        gdens_polytope_free(p);
        return compute_failed(st);
      }
      std::printf("%s,%s\n", fmt(x).c_str(), fmt(value).c_str());
    }
    gdens_polytope_free(p);
    return 0;
  }

  return invalid_usage("no subcommand given");
}
