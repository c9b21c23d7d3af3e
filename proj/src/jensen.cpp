#include "twistlab/jensen.hpp"

#include <cmath>

#include "twistlab/errors.hpp"
#include "twistlab/explicit_formula.hpp"
#include "twistlab/gamma.hpp"
#include "twistlab/util.hpp"
#include "twistlab/zeros.hpp"

namespace twistlab {

namespace {

// ln|Lambda(1/2 + e^{i theta})|, refusing nodes where the unit-normalized
// magnitude |Lambda| Q0^{-Re s} / min(|Gamma(s+1/2)|, 4) sinks below the
// floor.  The min() keeps the Gamma pole at theta = pi from masking a
// genuinely small L-value.
double log_abs_lambda(const DiskEvaluator& disk, double theta, double floor) {
  cplx s{0.5 + std::cos(theta), std::sin(theta)};
  double az = std::abs(disk.lambda(s));
  double scale = std::pow(disk.twist().q0, s.real()) *
                 std::min(std::abs(gamma_fn(s + 0.5)), 4.0);
  check(az > floor * scale, Errc::contour_near_zero,
        "a zero sits too close to the audit contour");
  return std::log(az);
}

}  // namespace

JensenAudit jensen_audit(const DiskEvaluator& disk, const LineEvaluator& line,
                         double contour_floor, double trap_tol) {
  const Twist& tw = disk.twist();
  check(line.twist().cond == tw.cond && line.twist().d == tw.d,
        Errc::config_error, "disk and line evaluators audit different twists");
  check(line.t_cap() >= 1.0, Errc::config_error,
        "zero scan must reach the top of the disk");
  check(contour_floor > 0.0 && contour_floor <= 0.5, Errc::config_error,
        "contour floor out of range");
  check(trap_tol >= 1e-12 && trap_tol <= 1e-2, Errc::config_error,
        "trapezoid tolerance out of range");

  JensenAudit out;
  CentralValues cv = central_values(line);
  out.center_order = central_zero_order(tw, cv);
  check(out.center_order <= 1, Errc::completeness_failure,
        "central order above one is outside the audited family");
  double center_l =
      std::log(std::abs(out.center_order == 0 ? cv.l_half : cv.lprime_half));
  out.center_term = 0.5 * std::log(tw.q0) + center_l;

  // Node-doubling trapezoid; on a period the plain node average is the
  // trapezoid rule, and midpoint refinement reuses every earlier node.
  int n = 64;
  double acc = 0.0;
  for (int j = 0; j < n; ++j)
    acc += log_abs_lambda(disk, 2.0 * kPi * j / n, contour_floor);
  double mean = acc / n;
  while (true) {
    double add = 0.0;
    for (int j = 0; j < n; ++j)
      add += log_abs_lambda(disk, 2.0 * kPi * (j + 0.5) / n, contour_floor);
    acc += add;
    n *= 2;
    double refined = acc / n;
    out.trap_delta = std::abs(refined - mean);
    mean = refined;
    if (out.trap_delta <= trap_tol) break;
    check(n < 8192, Errc::non_convergence,
          "contour mean still moving at 8192 nodes");
  }
  out.contour_mean = mean;
  out.nodes = n;

  ZeroScan scan = scan_zeros(line, 1.0, 1e-9);
  double zs = 0.0;
  for (double g : scan.gammas) zs += std::log(g);
  out.zero_sum = 2.0 * zs;
  out.residual = out.contour_mean + out.zero_sum - out.center_term;
  return out;
}

double contour_log_integral(const DiskEvaluator& disk, double th0, double th1,
                            int cells, double contour_floor) {
  check(cells >= 1 && cells <= (1 << 20), Errc::config_error,
        "cell count out of range");
  check(th1 > th0, Errc::config_error, "empty contour arc");
  check(contour_floor > 0.0 && contour_floor <= 0.5, Errc::config_error,
        "contour floor out of range");
  double h = (th1 - th0) / cells;
  double sum = 0.5 * (log_abs_lambda(disk, th0, contour_floor) +
                      log_abs_lambda(disk, th1, contour_floor));
  for (int j = 1; j < cells; ++j)
    sum += log_abs_lambda(disk, th0 + j * h, contour_floor);
  return sum * h;
}

}  // namespace twistlab
