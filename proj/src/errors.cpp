#include "errors.hpp"

namespace gdens {

const char* errc_message(errc code) noexcept {
  switch (code) {
    case errc::ok: return "ok";
    case errc::invalid_argument: return "invalid argument";
    case errc::degenerate_input: return "degenerate input";
    case errc::nonconvex: return "input polygon is not strictly convex";
    case errc::unknown_name: return "unknown name";
    case errc::unsupported_dimension: return "unsupported dimension";
    case errc::bad_bracket: return "bad minimization bracket";
    case errc::pole_in_bracket: return "denominator pole inside bracket";
    case errc::no_convergence: return "iteration did not converge";
    case errc::singular_hessian: return "Hessian is singular or indefinite";
    case errc::nonpositive_curvature: return "scalar curvature must be positive";
    case errc::nonpositive_volume: return "volume must be positive";
    case errc::nonpositive_density: return "computed density is nonpositive";
    case errc::parse_error: return "parse error";
  }
  return "unknown error";
}

}  // namespace gdens
