// Critical-line evaluator.
//
// On s = 1/2 + it the completed value is Lambda = F + w conj(F) with
//
//   F(t) = Gamma(1+it) Q0^{1/2+it} D(t)  -  sum_{k} Uhat_k rho_k(t),
//
// obtained by splitting every upper incomplete gamma of the off-line series
// into Gamma(a) minus its Kummer lower series and swapping the (n, k) order.
// The phase identity (Q0/n)^{it} x_n^{it} = 1 makes the Uhat_k real and
// t-independent, so they are built once per twist; only the rho_k recursion
//   rho_0 = 1/a,  rho_k = rho_{k-1} k / (a + k),  a = 1 + it,
// runs per evaluation.
//
// The catch: Re(F) (resp. Im F) is smaller than the individual k-terms by a
// factor ~ e^{pi t / 2} -- about 24 decimal digits at t = 35.  The certified
// build therefore forms c_n = chi A(n) sqrt(Q0)/n, e^{-x_n}, Uhat_k and the
// whole k-sum in 64-digit floats; double precision only ever touches
// exponentially small quantities (piece 1 carries the Gamma(1+it) prefactor).
// The light build does the same in long double, which holds up to t = 8
// where the interior cancellation is only ~6 digits.

#include "twistlab/lfunction.hpp"

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "twistlab/coefficients.hpp"
#include "twistlab/discriminant.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/gamma.hpp"
#include "twistlab/mp.hpp"
#include "twistlab/parallel.hpp"
#include "twistlab/util.hpp"

namespace twistlab {

namespace {

template <class R>
struct Cx {
  R re, im;
};

// Smallest k >= x past which the Poisson-shaped contributions
// x^{k+1} e^{-x} / k!, together with their geometric tail, drop below
// e^{ln_eps}.
int k_cut(double x, double ln_eps, int cap) {
  int k = static_cast<int>(std::ceil(std::max(x, 1.0))) + 4;
  while (k < cap) {
    double lt = (k + 1) * std::log(x) - x - std::lgamma(k + 2.0);
    double geom = std::log((k + 1.0) / (k + 1.0 - x));
    if (lt + geom < ln_eps) break;
    k += 3;
  }
  return std::min(k, cap);
}

template <class R>
struct HybridCore {
  double q0 = 0;
  double ln_q0 = 0, sqrt_q0 = 0;
  int w = +1;
  int k_max = 0;
  std::vector<R> u;            // Uhat_k
  std::vector<double> bn;      // chi_d(n) A(n) / n, drives D(t)
  std::vector<double> ln_n;
};

// Fixed-size blocks merged in block order: the result is bitwise independent
// of the thread count.
constexpr std::int64_t kBlock = 4096;

template <class R>
void build_core(HybridCore<R>& core, const Twist& tw, double x_max,
                double ln_eps, int jobs) {
  using std::acos;
  using std::exp;
  using std::sqrt;

  core.q0 = tw.q0;
  core.ln_q0 = std::log(tw.q0);
  core.sqrt_q0 = std::sqrt(tw.q0);
  core.w = tw.w;

  std::int64_t t_full =
      std::max<std::int64_t>(8, static_cast<std::int64_t>(std::ceil(tw.q0 * x_max)));
  check(t_full <= 16'000'000, Errc::truncation_insufficient,
        "line series needs " + std::to_string(t_full) + " terms");
  const int cap = static_cast<int>(std::ceil(2.6 * x_max)) + 48;

  std::vector<std::int64_t> a_tab = coeff_A(tw.E, t_full);
  std::vector<std::int64_t> cn(t_full + 1, 0);
  core.bn.assign(t_full + 1, 0.0);
  core.ln_n.assign(t_full + 1, 0.0);
  for (std::int64_t n = 1; n <= t_full; ++n) {
    std::int64_t v = a_tab[n] * kronecker(tw.d, n);
    if (v == 0) continue;
    cn[n] = v;
    core.bn[n] = static_cast<double>(v) / static_cast<double>(n);
    core.ln_n[n] = std::log(static_cast<double>(n));
  }

  // Q0 is rebuilt in working precision from the exact conductor: the k-sum's
  // interior cancellation is an identity at the true Q0 only, and seeding it
  // with the double-rounded field shifts Im/Re F by ~ t |F| ulp(q0), which
  // e^{pi t/2} amplifies into the leading digits of z above t ~ 28.
  const R q0_r = sqrt(R(tw.cond)) / (R(2) * acos(R(-1)));
  const R inv_q0 = R(1) / q0_r;
  const R sq_q0 = sqrt(q0_r);
  const R r_step = exp(-inv_q0);
  std::vector<R> inv_k(cap + 1, R(0));
  for (int k = 1; k <= cap; ++k) inv_k[k] = R(1) / R(k);

  const std::int64_t n_blocks = (t_full + kBlock - 1) / kBlock;
  std::vector<std::vector<R>> part(n_blocks);
  std::vector<int> part_kmax(n_blocks, 0);

  parallel_for(n_blocks, jobs, [&](std::int64_t b) {
    const std::int64_t lo = b * kBlock + 1;
    const std::int64_t hi = std::min(t_full, (b + 1) * kBlock);
    std::vector<R> acc(cap + 1, R(0));
    int km = 0;
    R q = exp(-(R(lo) * inv_q0));  // e^{-x_lo}
    for (std::int64_t n = lo; n <= hi; ++n) {
      if (n != lo) {
        q = q * r_step;
        if ((n & 1023) == 0) q = exp(-(R(n) * inv_q0));  // kill drift
      }
      if (cn[n] == 0) continue;
      R x = R(n) * inv_q0;
      int kc = k_cut(static_cast<double>(n) / tw.q0, ln_eps, cap);
      R term = R(cn[n]) * sq_q0 / R(n);  // c_n
      term = term * x * q;               // c_n x e^{-x} = Uhat_0 contribution
      acc[0] += term;
      for (int k = 1; k <= kc; ++k) {
        term = term * x;
        term = term * inv_k[k];
        acc[k] += term;
      }
      if (kc > km) km = kc;
    }
    part[b] = std::move(acc);
    part_kmax[b] = km;
  });

  core.k_max = 0;
  core.u.assign(cap + 1, R(0));
  for (std::int64_t b = 0; b < n_blocks; ++b) {
    for (int k = 0; k <= part_kmax[b]; ++k) core.u[k] += part[b][k];
    if (part_kmax[b] > core.k_max) core.k_max = part_kmax[b];
  }
  core.u.resize(core.k_max + 1);
}

template <class R>
std::complex<double> f_value(const HybridCore<R>& core, double t) {
  // Piece 1: the Dirichlet part, exponentially small via |Gamma(1+it)|.
  long double dr = 0, di = 0;
  for (std::size_t n = 1; n < core.bn.size(); ++n) {
    double b = core.bn[n];
    if (b == 0.0) continue;
    double ph = t * core.ln_n[n];
    dr += b * std::cos(ph);
    di -= b * std::sin(ph);
  }
  cplx p1 = gamma_fn(cplx(1.0, t)) * std::polar(core.sqrt_q0, t * core.ln_q0) *
            cplx(static_cast<double>(dr), static_cast<double>(di));

  // Piece 2: the k-sum, carried in R end to end.
  R tr(t);
  R t2 = tr * tr;
  R den = R(1) + t2;
  Cx<R> rho{R(1) / den, -tr / den};
  R acc_re = core.u[0] * rho.re;
  R acc_im = core.u[0] * rho.im;
  for (int k = 1; k <= core.k_max; ++k) {
    R dk = R((1.0 + k) * (1.0 + k)) + t2;
    R f = R(k) / dk;
    R fre = R(1.0 + k) * f;
    R fim = -tr * f;
    Cx<R> next{rho.re * fre - rho.im * fim, rho.re * fim + rho.im * fre};
    rho = next;
    acc_re += core.u[k] * rho.re;
    acc_im += core.u[k] * rho.im;
  }
  return p1 - cplx(static_cast<double>(acc_re), static_cast<double>(acc_im));
}

}  // namespace

struct LineEvaluator::Impl {
  HybridCore<long double> light;
  HybridCore<mp_real> heavy;
  bool use_heavy = false;
};

LineEvaluator::LineEvaluator(const Twist& tw, double t_cap, bool certified,
                             int jobs)
    : impl_(new Impl), tw_(tw), t_cap_(t_cap), certified_(certified) {
  check(t_cap > 0 && t_cap <= 40.0, Errc::config_error,
        "height cap outside (0, 40]");
  check(certified || t_cap <= 8.0, Errc::config_error,
        "light build is only valid up to t = 8");
  double x_max = kPi * t_cap / 2.0 + 36.0;
  impl_->use_heavy = certified;
  if (certified)
    build_core(impl_->heavy, tw_, x_max, -106.0, jobs);
  else
    build_core(impl_->light, tw_, x_max, -55.0, jobs);
}

LineEvaluator::~LineEvaluator() = default;
LineEvaluator::LineEvaluator(LineEvaluator&&) noexcept = default;
LineEvaluator& LineEvaluator::operator=(LineEvaluator&&) noexcept = default;

double LineEvaluator::z(double t) const {
  check(std::abs(t) <= t_cap_ + 1e-12, Errc::out_of_range,
        "t beyond the height cap");
  cplx f = impl_->use_heavy ? f_value(impl_->heavy, t)
                            : f_value(impl_->light, t);
  return tw_.w == +1 ? 2.0 * f.real() : 2.0 * f.imag();
}

double LineEvaluator::z_unit(double t) const {
  return z(t) / (2.0 * std::sqrt(tw_.q0) * gamma_abs_one_plus_it(t));
}

CentralValues central_values(const LineEvaluator& ev, double step) {
  check(step >= 1e-4, Errc::step_underflow, "derivative step below 1e-4");
  check(step <= ev.t_cap(), Errc::out_of_range, "derivative step beyond cap");
  const Twist& tw = ev.twist();
  double sq = std::sqrt(tw.q0);
  CentralValues cv;
  if (tw.w == +1) {
    cv.l_half = ev.z(0.0) / sq;
    cv.lprime_half = -(std::log(tw.q0) - kEulerGamma) * cv.l_half;
  } else {
    auto dq = [&](double h) { return (ev.z(h) - ev.z(-h)) / (2.0 * h); };
    double d1 = dq(step), d2 = dq(step / 2), d3 = dq(step / 4);
    double r1 = (4.0 * d2 - d1) / 3.0;
    double r2 = (4.0 * d3 - d2) / 3.0;
    cv.lprime_half = (16.0 * r2 - r1) / 15.0 / sq;
    cv.richardson_err = std::abs(r2 - r1) / sq;
  }
  return cv;
}

}  // namespace twistlab
