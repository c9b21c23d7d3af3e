// ---------------------------------------------------------------------------
// Explicit formula: spectral side vs arithmetic side for one twist.
//
// Everything here feeds a single closure residual, so each side is built
// from pieces the rest of the library does NOT use for zero finding: the
// archimedean term folds the digamma integral into x-space in closed form,
// the prime side resums power traces of the twisted local factors, and the
// spectral tail is charged through the certified bump-tail bound plus an
// argument-principle count margin per interval.  A residual at the numeric
// noise floor therefore certifies the zero list, the coefficient model and
// the functional-equation data against each other.
//
// Conventions, fixed once:  h(r) = int g(x) e^{irx} dx,
//
//   sum_gamma h(gamma) = (1/pi) int h(r) (ln Q0 + Re psi(1+ir)) dr
//                      - 2 sum_{p,k} c_d(p^k) (ln p) p^{-k/2} g(k ln p),
//
// zeros counted with multiplicity over both signs of gamma, the central
// zero m0 times.  c_d(p^k) = chi_d(p)^k C_k with C_k the Chebyshev power
// trace (C_0 = 2, C_1 = A(p), C_k = A(p) C_{k-1} - C_{k-2}) at good p and
// C_k = A(p)^k at bad p; chi_d(p) = 0 kills p | d.
// ---------------------------------------------------------------------------
#include "twistlab/explicit_formula.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "twistlab/coefficients.hpp"
#include "twistlab/discriminant.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/gamma.hpp"
#include "twistlab/quad.hpp"
#include "twistlab/util.hpp"

namespace twistlab {

namespace {

// Reach of the prime sum is e^{support}; trace tables stay cheap to about
// 2e5, i.e. supports up to 12.2.
constexpr double kMaxSupport = 12.2;

// Cutoff of the explicit digamma series sum_m (g(0)/m - I_m); the remainder
// is added in closed form below, so this only balances work between the
// explicit integrals and the tail integral.
constexpr int kHarmonicTerms = 48;

// g~ grid pitch for windowed pairs.  The convolved kernel oscillates at
// frequency t_edge <= ~30, so 1/2048 keeps the cubic interpolation error
// near 1e-9 over the whole support.
constexpr double kWindowGridStep = 1.0 / 2048.0;

double weighted_spectral(const std::function<double(double)>& h,
                         const std::vector<double>& gammas, int m0) {
  double s = 0.0;
  for (double g : gammas) s += h(g);
  return 2.0 * s + m0 * h(0.0);
}

}  // namespace

double arch_side(const Twist& tw, const TestPair& pair) {
  const double s = pair.support();
  const double g0 = pair.g(0.0);
  const double lnq = std::log(tw.q0);
  // (1/pi) int h(r)(ln Q0 + Re psi(1+ir)) dr with psi expanded as
  // -EulerGamma + sum_m (1/m - m/(m^2+r^2)); each r-integral collapses by
  // Parseval to an exponential moment of g, all of them one-sided.
  double total = 2.0 * g0 * (lnq - kEulerGamma);
  for (int m = 1; m <= kHarmonicTerms; ++m) {
    double hi = std::min(s, 42.0 / m);  // e^{-42} is far below the budget
    double im = integrate_adaptive(
        [&](double x) { return pair.g(x) * std::exp(-m * x); }, 0.0, hi,
        1e-13);
    total += 2.0 * (g0 / m - im);
  }
  // Remainder over m > kHarmonicTerms, resummed before integrating:
  //   sum_{m>M} [g(0)/m - I_m] = int_0^S (g(0)-g(x)) e^{-(M+1)x}/(1-e^{-x})
  //                            + g(0) [ -ln(1-e^{-S}) - sum_{m<=M} e^{-mS}/m ].
  // Near 0 the numerator difference is pure rounding noise amplified by the
  // 1/x pole, which an adaptive rule mistakes for structure; fixed Gauss
  // panels on the first sliver are exact for the true (smooth) integrand
  // and immune to the noise.
  auto rem = [&](double x) {
    double den = -std::expm1(-x);
    return (g0 - pair.g(x)) * std::exp(-(kHarmonicTerms + 1) * x) / den;
  };
  double hi2 = std::min(s, 1.0);
  double x_lo = std::min(1.0 / 64.0, 0.25 * s);
  double tail_int = integrate_panels(rem, 0.0, x_lo, 8, 32) +
                    integrate_adaptive(rem, x_lo, hi2, 1e-13);
  double rs = -std::log1p(-std::exp(-s));
  for (int m = 1; m <= kHarmonicTerms; ++m) rs -= std::exp(-m * s) / m;
  return total + 2.0 * (tail_int + g0 * rs);
}

double arch_side_quadrature(const Twist& tw, const TestPair& pair) {
  check(pair.spec().kind == PairSpec::Kind::bump, Errc::config_error,
        "direct r-quadrature needs bump-type spectral decay");
  const double lnq = std::log(tw.q0);
  auto f = [&](double r) {
    return pair.h(r) * (lnq + digamma({1.0, r}).real());
  };
  // h dies like tail(Q(r - edge)): 880 tail units put the truncation near
  // 1e-15 before the density factor.
  double edge = std::max(std::abs(pair.spec().a), std::abs(pair.spec().b));
  double x1 = edge + 2.0;
  double r_end = edge + 880.0 / pair.spec().Q;
  return 2.0 / kPi *
         (integrate_adaptive(f, 0.0, x1, 1e-12) +
          integrate_adaptive(f, x1, r_end, 1e-12));
}

double prime_side(const Twist& tw, const std::function<double(double)>& g,
                  double support) {
  check(support > 0.0 && support <= kMaxSupport, Errc::config_error,
        "prime sum reaches e^{support}; beyond 12.2 the trace tables blow up");
  auto pmax = static_cast<std::int64_t>(std::floor(std::exp(support)));
  auto primes = primes_up_to(pmax);
  auto ap = ap_table(tw.E, pmax);
  // Serial on purpose: 2e5 primes cost milliseconds and a fixed summation
  // order keeps every downstream report byte-reproducible.
  double sum = 0.0;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    auto p = static_cast<double>(primes[i]);
    double lp = std::log(p);
    if (lp >= support) break;
    int chi = kronecker(tw.d, primes[i]);
    if (chi == 0) continue;
    double a = (*ap)[i] / std::sqrt(p);
    bool bad = tw.E.conductor % primes[i] == 0;
    double rsp = 1.0 / std::sqrt(p);
    double pw = rsp;  // p^{-k/2}
    double ckm2 = 2.0, ckm1 = a, cbad = 1.0;
    for (int k = 1; k * lp < support; ++k) {
      double c;
      if (bad) {
        cbad *= a;
        c = cbad;
      } else if (k == 1) {
        c = a;
      } else {
        c = a * ckm1 - ckm2;
        ckm2 = ckm1;
        ckm1 = c;
      }
      double term = c * lp * pw * g(k * lp);
      sum += (k % 2 == 1 && chi < 0) ? -term : term;
      pw *= rsp;
    }
  }
  return 2.0 * sum;
}

double prime_side(const Twist& tw, const TestPair& pair) {
  return prime_side(
      tw, [&](double x) { return pair.g(x); }, pair.support());
}

double log_deriv_prime_sum(const Twist& tw, double sigma) {
  check(sigma > 1.5 && sigma <= 3.1, Errc::config_error,
        "log-derivative cross-check runs in the absolute range (1.5, 3.1]");
  constexpr std::int64_t kPmax = 200000;
  auto primes = primes_up_to(kPmax);
  auto ap = ap_table(tw.E, kPmax);
  double sum = 0.0;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    auto p = static_cast<double>(primes[i]);
    double lp = std::log(p);
    int chi = kronecker(tw.d, primes[i]);
    if (chi == 0) continue;
    double a = (*ap)[i] / std::sqrt(p);
    bool bad = tw.E.conductor % primes[i] == 0;
    double ps = std::pow(p, -sigma);
    double pk = ps;
    double ckm2 = 2.0, ckm1 = a, cbad = 1.0;
    for (int k = 1; pk > 1e-19 && k < 64; ++k) {
      double c;
      if (bad) {
        cbad *= a;
        c = cbad;
      } else if (k == 1) {
        c = a;
      } else {
        c = a * ckm1 - ckm2;
        ckm2 = ckm1;
        ckm1 = c;
      }
      double term = c * lp * pk;
      sum += (k % 2 == 1 && chi < 0) ? -term : term;
      pk *= ps;
    }
  }
  return sum;
}

double spectral_tail_bound(const Twist& tw,
                           const std::function<double(double)>& env,
                           double cap) {
  check(cap > 0.0, Errc::config_error, "tail bound needs a positive cap");
  // Unit intervals while the envelope is still fat, then geometric ones;
  // count([a,b]) <= smooth increment + 3 holds for any interval (argument
  // band of ~1.2 per endpoint plus a central-degeneracy margin).
  double total = 0.0;
  double r = cap;
  double prev = n_smooth(tw, r);
  for (int j = 0; j < 4096 && r < 1e30; ++j) {
    double width = j < 64 ? 1.0 : 0.25 * r;
    double e = env(r);
    double next = n_smooth(tw, r + width);
    double term = 2.0 * e * ((next - prev) + 3.0);
    total += term;
    prev = next;
    r += width;
    if (e < 1e-15 && term < 1e-16 * std::max(1.0, total))
      return total + 5.0 * term;
  }
  fail(Errc::tail_too_fat,
       "spectral envelope decays too slowly to certify a tail");
}

int central_zero_order(const Twist& tw, const CentralValues& cv,
                       double floor) {
  check(floor > 0.0 && floor <= 1e-3, Errc::config_error,
        "central floor out of range");
  // Waldspurger quantization keeps nonvanishing central data well above
  // any sane floor, so the classification is a clean threshold test.
  if (tw.w > 0) return std::abs(cv.l_half) >= floor ? 0 : 2;
  return std::abs(cv.lprime_half) >= floor ? 1 : 3;
}

WindowedPair::WindowedPair(const TestPair& base, double t_edge, double q_w)
    : base_(base), te_(t_edge), qw_(q_w) {
  check(qw_ >= 2.0 && qw_ <= 32.0, Errc::config_error,
        "window sharpness out of range");
  check(te_ >= 1.0 && te_ <= 80.0, Errc::config_error,
        "window edge out of range");
  const double s = base_.support();
  check(s + qw_ <= kMaxSupport, Errc::config_error,
        "windowed prime reach e^{support+q_w} is beyond the trace budget");
  step_ = kWindowGridStep;
  const auto& bt = BumpTable::instance();
  // x-side kernel of the smoothed indicator of [-t_edge, t_edge]:
  // g_w(u) = 2 f(u/q_w) sin(t_edge u)/u.
  auto gw = [&](double u) {
    double au = std::abs(u);
    if (au >= qw_) return 0.0;
    double fq = bt.f(au / qw_);
    if (au < 1e-6) return 2.0 * fq * te_ * (1.0 - sqr(te_ * u) / 6.0);
    return 2.0 * fq * std::sin(te_ * u) / u;
  };
  auto n = static_cast<std::ptrdiff_t>(std::ceil((s + qw_) / step_)) + 1;
  grid_.assign(static_cast<std::size_t>(n), 0.0);
  // Independent nodes: the fill is bit-reproducible under any thread count.
  // Six Gauss panels per oscillation of sin(t_edge u) are conservative for
  // order-16 panels.
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    double x = static_cast<double>(i) * step_;
    double lo = std::max(-s, x - qw_);
    double hi = std::min(s, x + qw_);
    if (lo >= hi) continue;
    int panels = 8 + static_cast<int>((hi - lo) * te_);
    grid_[static_cast<std::size_t>(i)] = integrate_panels(
        [&](double y) { return base_.g(y) * gw(x - y); }, lo, hi, panels);
  }
}

double WindowedPair::window(double r) const {
  const auto& bt = BumpTable::instance();
  return bt.phi(qw_ * (r + te_)) - bt.phi(qw_ * (r - te_));
}

double WindowedPair::h(double r) const { return base_.h(r) * window(r); }

double WindowedPair::g(double x) const {
  double ax = std::abs(x);
  if (ax >= support()) return 0.0;
  return cubic_at(grid_, step_, ax, grid_.size() > 1 ? grid_[1] : 0.0);
}

double WindowedPair::support() const { return base_.support() + qw_; }

double WindowedPair::h_tail_envelope(double r) const {
  // 0 <= I_w(r) <= 1 - Phi(q_w (r - t_edge)) <= tail(q_w (r - t_edge)).
  const auto& bt = BumpTable::instance();
  double w =
      r > te_ ? std::min(1.0, bt.tail(qw_ * (r - te_))) : 1.0;
  return base_.h_tail_envelope(r) * w;
}

ClosureBreakdown close_raw(const Twist& tw, const TestPair& pair,
                           const ZeroScan& zeros, int central_order) {
  check(central_order >= 0 && central_order <= 3, Errc::config_error,
        "central order outside the supported range");
  ClosureBreakdown out;
  out.central_order = central_order;
  out.arch = arch_side(tw, pair);
  out.primes = prime_side(tw, pair);
  out.spectral = weighted_spectral([&](double r) { return pair.h(r); },
                                   zeros.gammas, central_order);
  out.tail_bound = spectral_tail_bound(
      tw, [&](double r) { return pair.h_tail_envelope(r); }, zeros.cap);
  out.residual = out.spectral - (out.arch - out.primes);
  return out;
}

ClosureBreakdown close_windowed(const Twist& tw, const TestPair& pair,
                                const ZeroScan& zeros, int central_order,
                                double t_edge, double q_w) {
  check(central_order >= 0 && central_order <= 3, Errc::config_error,
        "central order outside the supported range");
  const double s = pair.support();
  if (q_w <= 0) q_w = std::min(11.0, kMaxSupport - 0.2 - s);
  if (t_edge <= 0) t_edge = zeros.cap - 10.0;
  check(t_edge >= 2.0 && t_edge <= zeros.cap - 1.0, Errc::config_error,
        "window edge needs clearance inside the zero cap");
  WindowedPair wp(pair, t_edge, q_w);
  ClosureBreakdown out;
  out.windowed = true;
  out.t_edge = t_edge;
  out.q_w = q_w;
  out.central_order = central_order;
  // The window turns the archimedean integrand compactly-supported in
  // practice, so the direct r-route is both fast and accurate here; the
  // x-route would need the convolved g~ and gains nothing.
  const double lnq = std::log(tw.q0);
  auto f = [&](double r) {
    return wp.h(r) * (lnq + digamma({1.0, r}).real());
  };
  double x1 = t_edge + 2.0;
  double r_end = t_edge + 880.0 / q_w;
  out.arch = 2.0 / kPi *
             (integrate_adaptive(f, 0.0, x1, 1e-11) +
              integrate_adaptive(f, x1, r_end, 1e-12));
  out.primes =
      prime_side(tw, [&](double x) { return wp.g(x); }, wp.support());
  out.spectral = weighted_spectral([&](double r) { return wp.h(r); },
                                   zeros.gammas, central_order);
  out.tail_bound = spectral_tail_bound(
      tw, [&](double r) { return wp.h_tail_envelope(r); }, zeros.cap);
  out.residual = out.spectral - (out.arch - out.primes);
  return out;
}

CountCertificate certify_count(const Twist& tw, const ZeroScan& zeros,
                               int central_order, double t_edge, double q_w,
                               double budget) {
  check(central_order >= 0 && central_order <= 3, Errc::config_error,
        "central order outside the supported range");
  check(q_w >= 4.0 && q_w <= kMaxSupport, Errc::config_error,
        "edge sharpness out of range");
  check(budget > 0.0 && budget <= 0.5, Errc::config_error,
        "certificate budget must stay below one zero's worth of mass");
  check(zeros.cap >= 6.0, Errc::config_error,
        "certificate needs a few units of scanned range");
  if (t_edge <= 0) {
    t_edge = zeros.cap - 2.5;
    // Prefer the middle of the gamma gap around the default edge: a zero
    // sitting on the rolloff is legal but weakens the detection margin.
    double lo = 0.0, hi = zeros.cap;
    for (double g : zeros.gammas) {
      if (g <= t_edge)
        lo = std::max(lo, g);
      else
        hi = std::min(hi, g);
    }
    double mid = 0.5 * (lo + hi);
    if (hi - lo >= 0.15 && mid >= zeros.cap - 3.1 && mid <= zeros.cap - 1.9)
      t_edge = mid;
  }
  check(t_edge >= 1.0 && t_edge <= zeros.cap - 1.2, Errc::config_error,
        "certificate edge needs clearance inside the zero cap");
  PairSpec spec;
  spec.kind = PairSpec::Kind::bump;
  spec.Q = q_w;
  spec.a = -t_edge;
  spec.b = t_edge;
  TestPair win(spec);
  CountCertificate out;
  out.t_edge = t_edge;
  out.q_w = q_w;
  out.budget = budget;
  out.central_order = central_order;
  out.predicted = arch_side(tw, win) - prime_side(tw, win);
  out.weighted_found = weighted_spectral([&](double r) { return win.h(r); },
                                         zeros.gammas, central_order);
  out.tail_bound = spectral_tail_bound(
      tw, [&](double r) { return win.h_tail_envelope(r); }, zeros.cap);
  out.residual = out.weighted_found - out.predicted;
  // The window exceeds 0.99 below t_edge - u99/q_w where tail(u99) = 0.005;
  // h >= 0 everywhere, so a zero missed below that line (or a wrong central
  // order) costs at least 0.99 in |residual| and cannot pass the budget.
  const auto& bt = BumpTable::instance();
  double lo_u = 0.0, hi_u = 64.0;
  for (int i = 0; i < 60; ++i) {
    double mid = 0.5 * (lo_u + hi_u);
    (bt.tail(mid) > 0.005 ? lo_u : hi_u) = mid;
  }
  out.t_reliable = t_edge - hi_u / q_w;
  for (double g : zeros.gammas)
    if (g < out.t_reliable) ++out.found;
  out.pass = std::abs(out.residual) + out.tail_bound <= budget;
  return out;
}

}  // namespace twistlab
