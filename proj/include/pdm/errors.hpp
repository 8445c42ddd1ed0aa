#pragma once

#include <stdexcept>
#include <string>

namespace pdm {

// Library error taxonomy. Mirrored one-to-one by the C API status codes.
enum class errc {
  invalid_argument = 1,
  unsupported_matching,      // interface matching undefined for this ordering
  unsupported_analytic,      // analytic junction forms unavailable for this ordering
  no_bound_state,
  condition_violated,        // a named well/spectrum condition failed
  domain_error,              // special-function argument outside its domain
  non_convergence,
  numerical_inconsistency,
  singular_interface,
  io_error,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace pdm
