#include "twistlab/errors.hpp"

namespace twistlab {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::config_error: return "config_error";
    case Errc::io_error: return "io_error";
    case Errc::bad_prime: return "bad_prime";
    case Errc::ambiguous_reduction: return "ambiguous_reduction";
    case Errc::not_coprime: return "not_coprime";
    case Errc::bad_d0: return "bad_d0";
    case Errc::out_of_range: return "out_of_range";
    case Errc::overflow_bound: return "overflow_bound";
    case Errc::not_found: return "not_found";
    case Errc::too_few_records: return "too_few_records";
    case Errc::empty_class: return "empty_class";
    case Errc::empty_list: return "empty_list";
    case Errc::insufficient_coefficients: return "insufficient_coefficients";
    case Errc::truncation_insufficient: return "truncation_insufficient";
    case Errc::non_convergence: return "non_convergence";
    case Errc::reality_violation: return "reality_violation";
    case Errc::completeness_failure: return "completeness_failure";
    case Errc::quadrature_failure: return "quadrature_failure";
    case Errc::tail_too_fat: return "tail_too_fat";
    case Errc::step_underflow: return "step_underflow";
    case Errc::no_consensus: return "no_consensus";
    case Errc::sign_ambiguous: return "sign_ambiguous";
    case Errc::contour_near_zero: return "contour_near_zero";
  }
  return "unknown";
}

int exit_code(Errc c) {
  switch (c) {
    case Errc::config_error:
    case Errc::io_error:
    case Errc::bad_prime:
    case Errc::ambiguous_reduction:
    case Errc::not_coprime:
    case Errc::bad_d0:
    case Errc::out_of_range:
    case Errc::overflow_bound:
    case Errc::not_found:
    case Errc::too_few_records:
    case Errc::empty_class:
    case Errc::empty_list:
    case Errc::insufficient_coefficients:
      return 1;
    case Errc::truncation_insufficient:
    case Errc::non_convergence:
    case Errc::reality_violation:
    case Errc::completeness_failure:
    case Errc::quadrature_failure:
    case Errc::tail_too_fat:
    case Errc::step_underflow:
    case Errc::no_consensus:
    case Errc::sign_ambiguous:
      return 2;
    case Errc::contour_near_zero:
      return 3;
  }
  return 1;
}

}  // namespace twistlab
