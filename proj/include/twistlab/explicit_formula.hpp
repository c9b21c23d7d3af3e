#pragma once
#include <functional>
#include <vector>

#include "twistlab/lfunction.hpp"
#include "twistlab/testfn.hpp"
#include "twistlab/twist.hpp"
#include "twistlab/zeros.hpp"

namespace twistlab {

// ---------------------------------------------------------------------------
// Explicit formula for a twisted L-function, spectral side against
// arithmetic side:
//
//   sum_gamma h(gamma)  =  arch(h) - primes(g),
//
//   arch   = (1/pi) int h(r) (ln Q0 + Re psi(1 + ir)) dr,
//   primes = 2 sum_{p, k >= 1} c_d(p^k) (ln p) p^{-k/2} g(k ln p),
//
// where the zero sum runs over all zeros 1/2 + i gamma with multiplicity
// (so +-gamma pairs and the central zero both count) and c_d(p^k) is the
// k-th power-trace of the twisted local factor: chi_d(p)^k times the
// Chebyshev value C_k(A(p)) at good p, times A(p)^k at bad p, zero at
// p | d.  Everything below is assembled from independently computable
// pieces so a closure residual near zero certifies the whole chain.
// ---------------------------------------------------------------------------

// Archimedean side, exact route: the r-integral is folded into x-space,
//   arch = 2 g(0)(ln Q0 - EulerGamma)
//        + 2 sum_{m>=1} [ g(0)/m - int_0^S g(x) e^{-mx} dx ],
// with the m-tail summed in closed form.  Absolute accuracy ~1e-10.
double arch_side(const Twist& tw, const TestPair& pair);

// Same quantity by direct adaptive quadrature in r.  Slow decay makes this
// practical only for bump pairs (the integrand inherits their tail); it
// exists as an independent cross-check of arch_side.
double arch_side_quadrature(const Twist& tw, const TestPair& pair);

// Prime side for any even pair given by its g and half-support.  Requires
// support <= 12.2 (trace tables up to e^12.2 ~ 2e5 stay cheap).
double prime_side(const Twist& tw, const std::function<double(double)>& g,
                  double support);
double prime_side(const Twist& tw, const TestPair& pair);

// -L'/L(sigma) on the real axis by the same local data; sigma in (1, 3.1].
// Cross-checks the prime machinery against a numeric log-derivative of the
// disk evaluator.
double log_deriv_prime_sum(const Twist& tw, double sigma);

// Certified bound on 2 sum_{gamma > cap} env(gamma): unit intervals are
// charged env(left end) times (smooth count increment + 3), the 3 covering
// the argument-term band on both ends plus a central-degeneracy margin.
// env must be nonincreasing on [cap, infinity).
double spectral_tail_bound(const Twist& tw,
                           const std::function<double(double)>& env,
                           double cap);

// Central zero order from parity and the quantized central values: even
// twists vanish at the center only to order two, odd ones carry order one
// (three if the derivative also vanishes).
int central_zero_order(const Twist& tw, const CentralValues& cv,
                       double floor = 1e-8);

// h~(r) = h(r) I_w(r): the base pair cut off by a smoothed indicator of
// [-t_edge, t_edge] with edge sharpness q_w.  g~ = g * g_w by direct
// convolution on a grid, so the prime side stays a finite sum over
// p^k < e^{support + q_w}.  Used where the base pair's own spectral tail
// is too fat to close the formula tightly (Fejer decays like 1/r^2).
class WindowedPair {
 public:
  WindowedPair(const TestPair& base, double t_edge, double q_w);

  double h(double r) const;
  double g(double x) const;
  double window(double r) const;   // I_w alone
  double support() const;          // base support + q_w
  double h_tail_envelope(double r) const;
  double t_edge() const { return te_; }
  double q_w() const { return qw_; }

 private:
  TestPair base_;
  double te_, qw_;
  std::vector<double> grid_;       // g~ on [0, support], uniform
  double step_;
};

struct ClosureBreakdown {
  double arch = 0;
  double primes = 0;
  double spectral = 0;     // 2 sum_found h(gamma) + m0 h(0)
  double tail_bound = 0;   // certified cap on the unseen |spectral| mass
  double residual = 0;     // spectral - (arch - primes)
  bool windowed = false;
  int central_order = 0;
  double t_edge = 0, q_w = 0;
};

// Raw closure: usable when the pair's own tail above zeros.cap is thin
// (bump pairs with window well inside the cap).  |residual| <= tail_bound
// plus the numerical budget certifies the zero list against the formula.
ClosureBreakdown close_raw(const Twist& tw, const TestPair& pair,
                           const ZeroScan& zeros, int central_order);

// Windowed closure: multiplies the pair by I_w so the spectral tail dies
// like the bump transform.  t_edge <= 0 or q_w <= 0 pick defaults
// (cap - 10, and the largest edge sharpness the prime budget allows).
ClosureBreakdown close_windowed(const Twist& tw, const TestPair& pair,
                                const ZeroScan& zeros, int central_order,
                                double t_edge = -1, double q_w = -1);

// Completeness certificate: the pair IS the smoothed indicator, so
//   2 N(about t_edge) + m0 ~ arch - primes,
// and since h >= 0, a residual within budget proves no zero below
// t_reliable (where the window still exceeds 0.99) was missed.  t_edge
// <= 0 picks cap - 2 nudged into the widest nearby gamma gap.
struct CountCertificate {
  double t_edge = 0, q_w = 0;
  double t_reliable = 0;
  long long found = 0;       // scan zeros below t_reliable
  double weighted_found = 0; // 2 sum I_w(gamma) + m0
  double predicted = 0;      // arch - primes
  double tail_bound = 0;
  double residual = 0;       // weighted_found - predicted
  double budget = 0;
  bool pass = false;
  int central_order = 0;
};

CountCertificate certify_count(const Twist& tw, const ZeroScan& zeros,
                               int central_order, double t_edge = -1,
                               double q_w = 12.0, double budget = 0.25);

}  // namespace twistlab
