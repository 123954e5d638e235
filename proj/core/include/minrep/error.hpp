#pragma once

#include <stdexcept>
#include <string>

namespace minrep {

// Every contract failure in the library carries one of these codes so that
// callers (and tests) can dispatch without string matching.
enum class errc {
  non_integral_b,
  delta_undefined,
  pole_in_formula,
  zero_lambda,
  sign_undefined,
  no_convergence,
  pole_c,
  argument_near_one,
  not_on_sphere,
  signature_mismatch,
  not_in_m_plus,
  not_in_m_minus,
  chart_mismatch,
  tangency_violated,
  hypothesis_violated,
  not_tabulated,
  tolerance_not_met,
  truncation_insufficient,
  not_in_kernel,
  window_too_noisy,
  invalid_parameter,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace minrep
