#pragma once
#include <stdexcept>
#include <string>

namespace twistlab {

// Every failure the library can raise.  exit_code() groups them the way the
// command-line tool reports them: 1 = bad input/configuration, 2 = a numeric
// certification failed, 3 = input is structurally unauditable.
enum class Errc {
  config_error,
  io_error,
  bad_prime,
  ambiguous_reduction,
  not_coprime,
  bad_d0,
  out_of_range,
  overflow_bound,
  not_found,
  too_few_records,
  empty_class,
  empty_list,
  insufficient_coefficients,
  truncation_insufficient,
  non_convergence,
  reality_violation,
  completeness_failure,
  quadrature_failure,
  tail_too_fat,
  step_underflow,
  no_consensus,
  sign_ambiguous,
  contour_near_zero,
};

const char* errc_name(Errc c);
int exit_code(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& what)
      : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& what) {
  throw Error(c, what);
}

inline void check(bool ok, Errc c, const std::string& what) {
  if (!ok) fail(c, what);
}

}  // namespace twistlab
