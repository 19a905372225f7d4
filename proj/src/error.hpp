#pragma once

#include <stdexcept>
#include <string>

namespace chz {

enum class Errc {
  invalid_argument,
  parse_error,
  singular_parameter,
  excluded_parameter,
  boundary_parameter,
  unsupported_ell,
  degenerate_recursion,
  singular_b,
  no_convergence,
  contour_too_close,
  newton_diverged,
  verification_failed,
};

const char* errc_name(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above; the C API
// maps them one-to-one onto chz_status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace chz
