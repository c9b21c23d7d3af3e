#include "twistlab/twist.hpp"

#include <cmath>
#include <numeric>

#include "twistlab/coefficients.hpp"
#include "twistlab/discriminant.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/util.hpp"

namespace twistlab {

int twist_sign(const Curve& E, std::int64_t d) {
  check(E.root_number == 1 || E.root_number == -1, Errc::config_error,
        "base curve root number is not set");
  return kronecker(d, -E.conductor) * E.root_number;
}

Twist make_twist(const Curve& E, std::int64_t d) {
  check(E.conductor > 0, Errc::config_error, "curve conductor must be positive");
  check(d == 1 || is_fundamental(d), Errc::config_error,
        "twist discriminant " + std::to_string(d) + " is not fundamental");
  std::int64_t ad = d < 0 ? -d : d;
  check(std::gcd(ad, E.conductor) == 1, Errc::not_coprime,
        "twist discriminant shares a factor with the conductor");
  check(E.conductor < 37 || ad <= 500, Errc::out_of_range,
        "|d| > 500 is not supported at conductor >= 37");
  check(ad <= 1000, Errc::out_of_range, "|d| > 1000 is not supported");
  Twist t;
  t.E = E;
  t.d = d;
  t.cond = E.conductor * d * d;
  t.q0 = std::sqrt(static_cast<double>(t.cond)) / (2.0 * kPi);
  t.w = twist_sign(E, d);
  return t;
}

// g(y) = sum A_d(n) exp(-2 pi n y).  The self-duality of the twisted series
// at level N = M d^2 fixes g(1/(N y)) = w N y^2 g(y); measuring the ratio r
// at y near the symmetry point 1/sqrt(N) recovers w, and |r| = 1 is a strong
// consistency certificate for the coefficients, conductor, and sign.
namespace {

double exp_sum(const std::vector<double>& Ad, double y) {
  double q = std::exp(-2.0 * kPi * y), qn = 1.0, s = 0.0;
  for (size_t n = 1; n < Ad.size(); ++n) {
    qn *= q;
    s += Ad[n] * qn;
  }
  return s;
}

}  // namespace

double fricke_ratio(const Curve& E, std::int64_t d) {
  double N = static_cast<double>(E.conductor) * d * d;
  std::int64_t terms = static_cast<std::int64_t>(std::ceil(6.1 * std::sqrt(N))) + 8;
  auto A = coeff_A(E, terms);
  std::vector<double> Ad(A.size());
  Ad[0] = 0.0;
  for (size_t n = 1; n < A.size(); ++n)
    Ad[n] = static_cast<double>(kronecker(d, n) * A[n]);
  for (double c : {1.1, 0.93, 1.23, 1.37}) {
    double y = c / std::sqrt(N);
    double gy = exp_sum(Ad, y);
    double gdual = exp_sum(Ad, 1.0 / (N * y));
    if (std::abs(gy) < 1e-8) continue;  // accidentally small denominator
    double r = gdual / (N * y * y * gy);
    if (std::abs(std::abs(r) - 1.0) < 1e-4) return r;
  }
  fail(Errc::sign_ambiguous,
       "self-duality ratio is not a clean sign for d = " + std::to_string(d));
}

int numeric_sign(const Curve& E, std::int64_t d) {
  return fricke_ratio(E, d) > 0 ? 1 : -1;
}

std::set<std::int64_t> squares_mod(std::int64_t m) {
  std::set<std::int64_t> s;
  for (std::int64_t x = 0; x < m; ++x) s.insert(x * x % m);
  return s;
}

bool genus_member(const Curve& E, std::int64_t d0, std::int64_t d) {
  check(is_fundamental(d0), Errc::bad_d0,
        "genus reference " + std::to_string(d0) + " is not fundamental");
  std::int64_t ad0 = d0 < 0 ? -d0 : d0;
  check(std::gcd(ad0, 2 * E.conductor) == 1, Errc::bad_d0,
        "genus reference must be coprime to twice the conductor");
  std::int64_t ad = d < 0 ? -d : d;
  if (std::gcd(ad, 2 * E.conductor * ad0) != 1) return false;
  if (!(static_cast<double>(d0) * d < 0)) return false;
  std::int64_t m = 4 * E.conductor;
  std::int64_t v = (d0 % m) * (d % m) % m;
  if (v < 0) v += m;
  std::int64_t x = 0;
  while (x < m && x * x % m != v) ++x;
  return x < m;
}

}  // namespace twistlab
