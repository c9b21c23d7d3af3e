#pragma once
#include <cstdint>
#include <vector>

#include "twistlab/lfunction.hpp"

namespace twistlab {

// Result of a sign-change scan of z_unit over (0, cap].  Central zeros
// (odd sign, or an even twist with vanishing central value) are a parity /
// rank statement and are never listed in gammas.
struct ZeroScan {
  std::vector<double> gammas;      // ordinates in (0, cap], ascending
  double cap = 0;
  double tol = 0;                  // bisection half-width the scan refined to
  std::int64_t evaluations = 0;    // z_unit calls spent
};

// Local density of critical-line zeros near height tau, zeros per unit t:
// the phase speed (ln Q0 + Re psi(1 + i tau)) / pi, floored at 0.30 so the
// scan step stays bounded when Q0 < 1 pushes the speed negative.
double zero_density(const Twist& tw, double tau);

// Smooth counting term for zeros in (0, T]:
//   (T ln Q0 + Im log Gamma(1 + iT)) / pi  -  1/2 [sign = -1].
// The parity term is the central zero counting half on the box boundary.
// The actual count fluctuates around this by the bounded argument term
// (and drops a further unit per central zero pair of an even twist whose
// center vanishes); the spread is exercised in the tests, not assumed.
double n_smooth(const Twist& tw, double T);

// All zeros with 0 < gamma <= cap, found as sign changes of z_unit on a
// density-adapted grid and refined by bisection to +-tol.  Pairs of zeros
// closer than the grid step can escape a sign scan; the independent count
// audit lives in the explicit-formula layer, not here.
ZeroScan scan_zeros(const LineEvaluator& ev, double cap, double tol = 1e-9);

// Lowest zero above the center: scans widening caps until one appears.
// Throws not_found if none lies below the evaluator's height cap.
double first_zero(const LineEvaluator& ev, double tol = 1e-9);

}  // namespace twistlab
