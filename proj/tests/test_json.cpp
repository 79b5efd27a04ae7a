#include <string>

#include "doctest.h"
#include "json.hpp"
#include "report_json.hpp"

using namespace gdens;

namespace {

template <class F>
std::pair<errc, std::string> failure_of(F&& body) {
  try {
    body();
  } catch (const Error& e) {
    return {e.code(), e.what()};
  }
  return {errc::ok, ""};
}

}  // namespace

TEST_CASE("loads the pentagon from JSON") {
  const Polytope p = load_polytope_json(
      R"({"vertices": [[-1,-1],[1,-1],[1,0],[0,1],[-1,1]]})");
  CHECK(p.vertices.size() == 5);
  CHECK(area(p) == doctest::Approx(3.5));
}

TEST_CASE("orientation is normalized on load") {
  const Polytope ccw =
      load_polytope_json(R"({"vertices": [[0,0],[1,0],[0,1]]})");
  const Polytope cw = load_polytope_json(R"({"vertices": [[0,0],[0,1],[1,0]]})");
  CHECK(area(ccw) == doctest::Approx(area(cw)));
  CHECK(area(cw) > 0.0);
}

TEST_CASE("parse failures name the offending field") {
  auto [code1, msg1] = failure_of([] { load_polytope_json("not json"); });
  CHECK(code1 == errc::parse_error);

  auto [code2, msg2] = failure_of([] { load_polytope_json(R"({"verts": []})"); });
  CHECK(code2 == errc::parse_error);
  CHECK(msg2.find("vertices") != std::string::npos);

  auto [code3, msg3] =
      failure_of([] { load_polytope_json(R"({"vertices": 7})"); });
  CHECK(code3 == errc::parse_error);
  CHECK(msg3.find("vertices") != std::string::npos);

  auto [code4, msg4] = failure_of(
      [] { load_polytope_json(R"({"vertices": [[0,0],[1,0],[0,"x"]]})"); });
  CHECK(code4 == errc::parse_error);
  CHECK(msg4.find("vertices[2]") != std::string::npos);

  auto [code5, msg5] = failure_of(
      [] { load_polytope_json(R"({"vertices": [[0,0],[1,0],[0]]})"); });
  CHECK(code5 == errc::parse_error);
  CHECK(msg5.find("vertices[2]") != std::string::npos);
}

TEST_CASE("geometric failures keep their own codes") {
  auto [code1, msg1] =
      failure_of([] { load_polytope_json(R"({"vertices": [[0,0],[1,0]]})"); });
  CHECK(code1 == errc::degenerate_input);

  auto [code2, msg2] = failure_of([] {
    load_polytope_json(R"({"vertices": [[0,0],[2,0],[1,1],[1,-1]]})");
  });
  CHECK(code2 == errc::nonconvex);
}

TEST_CASE("report serialization shape and round trip") {
  DensityReport report;
  report.theta = 0.4549;
  report.nu = -0.7878;
  report.metric_label = "Wang-Zhu soliton";
  report.add("c_1", -0.434748);
  report.add("min_integral", 3.36094);

  const std::string text = report_to_json(report);
  const auto doc = nlohmann::ordered_json::parse(text);
  CHECK(doc["metric_label"] == "Wang-Zhu soliton");
  CHECK(doc["theta"].get<double>() == doctest::Approx(0.4549));
  CHECK(doc["nu"].get<double>() == doctest::Approx(-0.7878));
  CHECK(doc["intermediates"]["c_1"].get<double>() ==
        doctest::Approx(-0.434748));

  // key order is stable and re-rendering reproduces the bytes
  auto keys = std::vector<std::string>();
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"metric_label", "theta", "nu",
                                         "intermediates"});
  CHECK(doc.dump(2) == text);
}

TEST_CASE("report values survive the round trip exactly") {
  DensityReport report;
  report.theta = 0.45485352299530946;
  report.nu = -0.78777983934379903;
  report.metric_label = "x";
  report.add("v", 3.360938198208661);
  const std::string text = report_to_json(report);
  const auto doc = nlohmann::ordered_json::parse(text);
  CHECK(doc["theta"].get<double>() == report.theta);
  CHECK(doc["nu"].get<double>() == report.nu);
  CHECK(doc["intermediates"]["v"].get<double>() == 3.360938198208661);
}
