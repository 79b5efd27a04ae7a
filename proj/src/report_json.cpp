#include "report_json.hpp"

#include <cmath>

#include "json.hpp"

namespace gdens {

using ordered_json = nlohmann::ordered_json;

Polytope load_polytope_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const std::exception& e) {
    fail(errc::parse_error, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object())
    fail(errc::parse_error, "top-level value must be an object");
  if (!doc.contains("vertices"))
    fail(errc::parse_error, "missing required key \"vertices\"");
  const ordered_json& verts = doc["vertices"];
  if (!verts.is_array())
    fail(errc::parse_error, "\"vertices\" must be an array of [x, y] pairs");

  std::vector<Point> points;
  points.reserve(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const ordered_json& entry = verts[i];
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
        !entry[1].is_number())
      fail(errc::parse_error, "\"vertices[" + std::to_string(i) +
                                  "]\" must be an [x, y] number pair");
    const double x = entry[0].get<double>();
    const double y = entry[1].get<double>();
    if (!std::isfinite(x) || !std::isfinite(y))
      fail(errc::parse_error, "\"vertices[" + std::to_string(i) +
                                  "]\" must hold finite numbers");
    points.push_back(make_point(x, y));
  }
  return validate_polygon(points);
}

std::string report_to_json(const DensityReport& report) {
  ordered_json doc;
  doc["metric_label"] = report.metric_label;
  doc["theta"] = report.theta;
  doc["nu"] = report.nu;
  ordered_json inter = ordered_json::object();
  for (const auto& [name, value] : report.intermediates) inter[name] = value;
  doc["intermediates"] = std::move(inter);
  return doc.dump(2);
}

}  // namespace gdens
