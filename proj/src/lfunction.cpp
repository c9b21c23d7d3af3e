// Off-line completed-function evaluator: the theta-balanced incomplete-gamma
// split.  Everything here is plain double work; each term costs one complex
// power and one upper incomplete gamma.  The critical-line evaluator with its
// big-float interior lives in line_eval.cpp.

#include "twistlab/lfunction.hpp"

#include <cmath>
#include <string>

#include "twistlab/coefficients.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/gamma.hpp"
#include "twistlab/util.hpp"

namespace twistlab {

namespace {

// (Q0/n)^p = exp(p * ln(Q0/n)) with the log precomputed per n.
inline cplx pow_ln(double ln_q0_n, cplx p) {
  double mag = std::exp(p.real() * ln_q0_n);
  double ph = p.imag() * ln_q0_n;
  return {mag * std::cos(ph), mag * std::sin(ph)};
}

}  // namespace

DiskEvaluator::DiskEvaluator(const Twist& tw, DiskPrecision prec)
    : tw_(tw), prec_(prec) {
  check(prec_.theta_span >= 1.0, Errc::config_error, "theta_span < 1");
  double need = tw_.q0 * prec_.x_cut * prec_.theta_span;
  std::int64_t n_max = static_cast<std::int64_t>(std::ceil(need)) + 8;
  check(n_max <= prec_.max_terms, Errc::truncation_insufficient,
        "series needs " + std::to_string(n_max) + " terms, cap " +
            std::to_string(prec_.max_terms));
  ad_ = twisted_a(tw_.E, tw_.d, n_max);
  ln_q0_n_.resize(ad_.size());
  for (std::size_t n = 1; n < ad_.size(); ++n)
    ln_q0_n_[n] = std::log(tw_.q0 / static_cast<double>(n));
}

std::complex<double> DiskEvaluator::lambda(std::complex<double> s,
                                           double theta) const {
  check(std::abs(s - cplx{0.5, 0.0}) <= 2.6, Errc::out_of_range,
        "s outside the evaluator disk");
  double th_min = std::min(theta, 1.0 / theta);
  check(th_min >= 1.0 / prec_.theta_span - 1e-12, Errc::config_error,
        "theta outside the sieved span");

  std::int64_t t_cut = static_cast<std::int64_t>(
      std::ceil(tw_.q0 * prec_.x_cut / th_min));
  std::int64_t n_max = std::min<std::int64_t>(
      t_cut, static_cast<std::int64_t>(ad_.size()) - 1);

  // On the critical line with a balanced split, the second sum is the exact
  // conjugate of the first.
  bool conj_shortcut = (theta == 1.0 && s.real() == 0.5 && s.imag() != 0.0);

  cplx a1 = s + 0.5, a2 = 1.5 - s;
  cplx sum1 = 0, sum2 = 0;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    if (ad_[n] == 0.0) continue;
    double x = static_cast<double>(n) / tw_.q0;
    sum1 += ad_[n] * pow_ln(ln_q0_n_[n], s) * upper_gamma(a1, theta * x);
    if (!conj_shortcut)
      sum2 += ad_[n] * pow_ln(ln_q0_n_[n], 1.0 - s) * upper_gamma(a2, x / theta);
  }
  if (conj_shortcut) sum2 = std::conj(sum1);
  return sum1 + static_cast<double>(tw_.w) * sum2;
}

std::complex<double> DiskEvaluator::l_value(std::complex<double> s) const {
  cplx completed = lambda(s);
  cplx factor = std::exp(s * std::log(tw_.q0) + log_gamma(s + 0.5));
  return completed / factor;
}

double DiskEvaluator::fe_residual(std::complex<double> s) const {
  cplx left = lambda(s, 1.25);
  cplx right = static_cast<double>(tw_.w) * lambda(1.0 - s, 1.0);
  cplx here = lambda(s, 1.0);
  return std::abs(left - right) / (1.0 + std::abs(here));
}

}  // namespace twistlab
