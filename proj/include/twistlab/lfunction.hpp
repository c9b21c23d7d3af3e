#pragma once
#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "twistlab/twist.hpp"

namespace twistlab {

// ---------------------------------------------------------------------------
// Off-line evaluator.
//
// Completed values Lambda(s) = Q0^s Gamma(s + 1/2) L(s) on the disk
// |s - 1/2| <= 2.6 by the two-sided incomplete-gamma split balanced at a
// free parameter theta:
//
//   Lambda_theta(s) =       sum_{n<=T} a_d(n) (Q0/n)^s     Gamma(s+1/2, theta x_n)
//                   + w *   sum_{n<=T} a_d(n) (Q0/n)^{1-s} Gamma(3/2-s,  x_n/theta)
//
// with x_n = n/Q0.  Both sums share the cutoff T = ceil(Q0 x_cut / min(theta,
// 1/theta)); the dropped tail is O(e^{-x_cut}).  Moving theta reshuffles the
// two sums without moving the value, which is what fe_residual probes.
// ---------------------------------------------------------------------------

struct DiskPrecision {
  double x_cut = 48.6;                  // truncate once n/Q0 exceeds this
  double theta_span = 1.3;              // accepted theta range [1/span, span]
  std::int64_t max_terms = 4'000'000;   // refuse absurd truncation lengths
};

class DiskEvaluator {
 public:
  explicit DiskEvaluator(const Twist& tw, DiskPrecision prec = {});

  // Lambda(s) via the split balanced at theta.  theta must lie within the
  // span the constructor sieved coefficients for.
  std::complex<double> lambda(std::complex<double> s, double theta = 1.0) const;

  // L(s) = Lambda(s) / (Q0^s Gamma(s + 1/2)); caller keeps s + 1/2 away
  // from the Gamma poles.
  std::complex<double> l_value(std::complex<double> s) const;

  // Self-consistency probe: the theta = 5/4 split at s against the sign-
  // reflected theta = 1 split at 1 - s, normalized by 1 + |Lambda(s)|.
  // Algebraically ~0 only when the coefficients, the conductor, and the
  // sign all describe one self-dual series.
  double fe_residual(std::complex<double> s) const;

  const Twist& twist() const { return tw_; }

 private:
  Twist tw_;
  DiskPrecision prec_;
  std::vector<double> ad_;        // a_d(n) = chi_d(n) A(n) / sqrt(n)
  std::vector<double> ln_q0_n_;   // ln(Q0 / n), same indexing
};

// ---------------------------------------------------------------------------
// Critical-line evaluator.
//
// On s = 1/2 + it the split collapses to Lambda = F + w conj(F) with
//
//   F(t) = Gamma(1+it) Q0^{1/2+it} D(t) - sum_k Uhat_k rho_k(t),
//
//   D(t)   = sum_n a_d(n) n^{-1/2} e^{-it ln n}                (double),
//   Uhat_k = (1/k!) sum_n c_n x_n^{k+1} e^{-x_n},  c_n = a_d(n) sqrt(Q0/n),
//   rho_k  = k! / ((a)(a+1)...(a+k)),  a = 1 + it,
//
// where the phase identity (Q0/n)^{it} x_n^{it} = 1 makes every Uhat_k real
// and t-independent.  The k-sum hides an e^{pi t / 2} interior cancellation
// (~24 digits at t = 35), so the certified build carries Uhat and rho in
// 64-digit floats; the light build (long double) is valid for t <= 8 where
// the cancellation is only ~6 digits.
//
// z(t) = 2 Re F (w = +1) or 2 Im F (w = -1) is the real section:
// Lambda(1/2 + it) = z(t) resp. i z(t), and z(-t) = +/- z(t).
// ---------------------------------------------------------------------------

class LineEvaluator {
 public:
  // t_cap fixes the truncation budget; z(t) accepts |t| <= t_cap.
  // certified = false selects the light build (requires t_cap <= 8).
  LineEvaluator(const Twist& tw, double t_cap, bool certified, int jobs = 1);
  ~LineEvaluator();
  LineEvaluator(LineEvaluator&&) noexcept;
  LineEvaluator& operator=(LineEvaluator&&) noexcept;

  double z(double t) const;

  // z / (2 sqrt(Q0) |Gamma(1+it)|) = +/- |L(1/2+it)| / 2: bounded, so sign
  // scans and bracketing tolerances are uniform in t.
  double z_unit(double t) const;

  double t_cap() const { return t_cap_; }
  bool certified() const { return certified_; }
  const Twist& twist() const { return tw_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  Twist tw_;
  double t_cap_ = 0;
  bool certified_ = false;
};

// Central values read off the line section by parity.
//
// Even sign:  L(1/2) = z(0)/sqrt(Q0), and Lambda'(1/2) = 0 forces
//             L'(1/2) = -(ln Q0 - EulerGamma) L(1/2).
// Odd sign:   L(1/2) = 0, L'(1/2) = z'(0)/sqrt(Q0) with z'(0) by a
//             three-level Richardson ladder on the odd difference quotient.
struct CentralValues {
  double l_half = 0;
  double lprime_half = 0;
  double richardson_err = 0;   // |last two Richardson levels| (odd sign only)
};

CentralValues central_values(const LineEvaluator& ev, double step = 0.1);

}  // namespace twistlab
