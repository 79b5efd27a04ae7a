#pragma once

#include <stdexcept>
#include <string>

namespace gdens {

// Error taxonomy shared with the C API; keep the numbering in sync with
// gdens_status in include/gdens/gdens.h.
enum class errc {
  ok = 0,
  invalid_argument = 1,
  degenerate_input = 2,
  nonconvex = 3,
  unknown_name = 4,
  unsupported_dimension = 5,
  bad_bracket = 6,
  pole_in_bracket = 7,
  no_convergence = 8,
  singular_hessian = 9,
  nonpositive_curvature = 10,
  nonpositive_volume = 11,
  nonpositive_density = 12,
  parse_error = 13,
};

const char* errc_message(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace gdens
