#pragma once
#include "twistlab/lfunction.hpp"

namespace twistlab {

// ---------------------------------------------------------------------------
// Jensen audit on the unit disk around the central point.
//
// With F(z) = Lambda(1/2 + z) and the central zero of order m pulled out,
// Jensen's formula reads
//
//   (1/2pi) oint ln|F(e^{i theta})|  =  ln|F^(m)(0)/m!|
//                                    +  sum_{0<|z_k|<1} ln(1/|z_k|),
//
// and every term on the right is measured elsewhere in the library: the
// central derivative quantizes through the line section, and the zeros
// inside the disk sit at +-i gamma with gamma from the scan.  The audit
// residual
//
//   contour_mean + 2 sum_{0<gamma<=1} ln gamma - center_term
//
// is therefore an independent consistency knot tying the disk evaluator,
// the line evaluator, and the zero list together; it vanishes only when
// all three agree and no zero below height one was missed.
// ---------------------------------------------------------------------------

struct JensenAudit {
  double contour_mean = 0;  // (1/2pi) oint ln|Lambda(1/2 + e^{i theta})|
  double center_term = 0;   // ln Q0 / 2 + ln|L(1/2)| (or |L'(1/2)| at m = 1)
  double zero_sum = 0;      // 2 sum_{0<gamma<=1} ln gamma
  double residual = 0;      // contour_mean + zero_sum - center_term
  int center_order = 0;
  int nodes = 0;            // trapezoid nodes at convergence
  double trap_delta = 0;    // last node-doubling change of the mean
};

// Runs the audit.  The contour mean uses a node-doubling trapezoid (64 to
// 8192 nodes; periodic analytic integrand, so convergence is spectral until
// a zero crowds the contour).  Any node whose unit-normalized |Lambda|
// drops below contour_floor aborts with contour_near_zero: a zero that
// close to the circle makes the audit numerically meaningless.  Central
// orders above one are refused with completeness_failure.
JensenAudit jensen_audit(const DiskEvaluator& disk, const LineEvaluator& line,
                         double contour_floor = 1e-6, double trap_tol = 1e-6);

// Plain trapezoid of ln|Lambda(1/2 + e^{i theta})| over [th0, th1] with the
// given cell count, floor-guarded like the audit.  Exposed so partition and
// reflection identities of the contour integrand are testable directly.
double contour_log_integral(const DiskEvaluator& disk, double th0, double th1,
                            int cells, double contour_floor = 1e-6);

}  // namespace twistlab
