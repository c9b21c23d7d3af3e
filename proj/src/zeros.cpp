#include "twistlab/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "twistlab/errors.hpp"
#include "twistlab/gamma.hpp"

namespace twistlab {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;

// Central values are quantized: they vanish exactly or sit above ~1e-4 for
// any conductor this library reaches, so anything under this floor is a
// central zero, not a small value.
constexpr double kCentralFloor = 1e-8;

// Where the sign is sampled when the center itself is a zero.  A noncentral
// zero below this would need a near-triple degeneracy at the center.
constexpr double kCenterProbe = 1e-3;

double bisect(const LineEvaluator& ev, double lo, double hi, double f_lo,
              double tol, std::int64_t& evals) {
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    double f_mid = ev.z_unit(mid);
    ++evals;
    if (f_mid == 0.0) return mid;
    if ((f_lo < 0.0) == (f_mid < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double zero_density(const Twist& tw, double tau) {
  double speed =
      (std::log(tw.q0) + digamma({1.0, std::abs(tau)}).real()) / kPi;
  return std::max(0.30, speed);
}

double n_smooth(const Twist& tw, double T) {
  check(T >= 0.0, Errc::out_of_range, "counting height must be nonnegative");
  // A zero sitting on the counting-box boundary contributes half a unit of
  // phase, so the parity-forced central zero of an odd twist costs the
  // strictly-above count 1/2.  (A rank-two even twist costs a full unit
  // the same way; that shows up in the residual, not here.)
  double parity = tw.w < 0 ? 0.5 : 0.0;
  return (T * std::log(tw.q0) + log_gamma({1.0, T}).imag()) / kPi - parity;
}

ZeroScan scan_zeros(const LineEvaluator& ev, double cap, double tol) {
  check(cap > 0.0 && cap <= ev.t_cap() * (1.0 + 1e-12), Errc::out_of_range,
        "scan cap exceeds the evaluator height cap");
  check(tol >= 1e-12 && tol <= 1e-2, Errc::out_of_range,
        "bisection tolerance outside [1e-12, 1e-2]");
  cap = std::min(cap, ev.t_cap());
  const Twist& tw = ev.twist();

  ZeroScan out;
  out.cap = cap;
  out.tol = tol;
  auto zu = [&](double t) {
    ++out.evaluations;
    return ev.z_unit(t);
  };

  // Seed the walk at the center.  Odd signs vanish there structurally, and
  // an even twist can vanish by rank; either way the sign just above the
  // center comes from a probe, so the central zero never enters gammas.
  double t_prev = 0.0;
  double f_prev = tw.w < 0 ? 0.0 : zu(0.0);
  if (std::abs(f_prev) < kCentralFloor) {
    t_prev = std::min(kCenterProbe, 0.5 * cap);
    f_prev = zu(t_prev);
  }

  while (t_prev < cap) {
    double h = std::min(0.25, 1.0 / (4.0 * zero_density(tw, t_prev)));
    double t_next = std::min(t_prev + h, cap);
    double f_next = zu(t_next);
    if (f_next == 0.0) {
      out.gammas.push_back(t_next);
      t_next = std::min(t_next + tol, cap);
      f_next = zu(t_next);
    } else if ((f_prev < 0.0) != (f_next < 0.0)) {
      out.gammas.push_back(
          bisect(ev, t_prev, t_next, f_prev, tol, out.evaluations));
    }
    t_prev = t_next;
    f_prev = f_next;
  }
  return out;
}

double first_zero(const LineEvaluator& ev, double tol) {
  double cap = std::min(8.0, ev.t_cap());
  for (;;) {
    ZeroScan s = scan_zeros(ev, cap, tol);
    if (!s.gammas.empty()) return s.gammas.front();
    if (cap >= ev.t_cap()) break;
    cap = std::min(2.0 * cap, ev.t_cap());
  }
  fail(Errc::not_found, "no zero below the evaluator height cap");
}

}  // namespace twistlab
