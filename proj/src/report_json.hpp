#pragma once

#include <string>

#include "density.hpp"
#include "geometry.hpp"

namespace gdens {

/// Loads {"vertices": [[x, y], ...]} and validates it. Parse failures name
/// the offending field; geometric failures carry their own error codes.
Polytope load_polytope_json(const std::string& text);

/// Report as a JSON object with keys metric_label, theta, nu and
/// intermediates (object of named numbers), two-space indented, stable key
/// order, no trailing newline.
std::string report_to_json(const DensityReport& report);

}  // namespace gdens
