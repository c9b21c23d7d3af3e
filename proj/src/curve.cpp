#include "twistlab/curve.hpp"

#include <cmath>
#include <vector>

#include "twistlab/errors.hpp"

namespace twistlab {

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

}  // namespace

std::int64_t Curve::discriminant() const {
  __int128 B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
  __int128 d = -B2 * B2 * B8 - 8 * B4 * B4 * B4 - 27 * B6 * B6 + 9 * B2 * B4 * B6;
  check(d > -(__int128(1) << 62) && d < (__int128(1) << 62), Errc::overflow_bound,
        "discriminant exceeds the supported coefficient range");
  return static_cast<std::int64_t>(d);
}

int ap_legendre(const Curve& E, std::int64_t p) {
  check(p >= 3 && p % 2 == 1, Errc::bad_prime,
        "character sum needs an odd prime, got " + std::to_string(p));
  // Nonzero quadratic residues mod p, built incrementally: (i+1)^2 - i^2 = 2i+1.
  std::vector<unsigned char> qr(p, 0);
  {
    std::int64_t s = 1, inc = 3;
    for (std::int64_t i = 1; 2 * i <= p - 1; ++i) {
      qr[s] = 1;
      s += inc;
      if (s >= p) s -= p;
      inc += 2;
      if (inc >= p) inc -= p;
    }
  }
  // f(x) = 4x^3 + b2 x^2 + 2 b4 x + b6 mod p by finite differences.
  std::int64_t B2 = mod_reduce(E.b2(), p), B4 = mod_reduce(2 * E.b4(), p),
               B6 = mod_reduce(E.b6(), p);
  auto f_at = [&](std::int64_t x) {
    std::int64_t v = (4 * x + B2) % p;
    v = (v * x + B4) % p;
    v = (v * x + B6) % p;
    return v;
  };
  std::int64_t f = f_at(0);
  std::int64_t d1 = mod_reduce(f_at(1) - f, p);
  std::int64_t d2 = mod_reduce(f_at(2) - 2 * f_at(1) + f, p);
  std::int64_t d3 = mod_reduce(24, p);
  std::int64_t sum = 0;
  for (std::int64_t x = 0; x < p; ++x) {
    if (f != 0) sum += qr[f] ? 1 : -1;
    f += d1;
    if (f >= p) f -= p;
    d1 += d2;
    if (d1 >= p) d1 -= p;
    d2 += d3;
    if (d2 >= p) d2 -= p;
  }
  return static_cast<int>(-sum);
}

int ap_bruteforce(const Curve& E, std::int64_t p) {
  check(p >= 2 && p <= 5000, Errc::bad_prime, "brute-force count limited to p <= 5000");
  std::int64_t a1 = mod_reduce(E.a[0], p), a2 = mod_reduce(E.a[1], p),
               a3 = mod_reduce(E.a[2], p), a4 = mod_reduce(E.a[3], p),
               a6 = mod_reduce(E.a[4], p);
  std::int64_t count = 1;  // the point at infinity
  for (std::int64_t x = 0; x < p; ++x) {
    std::int64_t rhs = (((x + a2) * x + a4) % p * x + a6) % p;
    for (std::int64_t y = 0; y < p; ++y) {
      std::int64_t lhs = (y * y + a1 * x * y + a3 * y) % p;
      if (lhs == rhs) ++count;
    }
  }
  return static_cast<int>(p + 1 - count);
}

Reduction reduction_at(const Curve& E, std::int64_t p) {
  check(E.conductor > 0, Errc::config_error, "curve conductor must be positive");
  auto it = E.bad_override.find(p);
  if (it != E.bad_override.end()) return it->second;
  if (E.conductor % p != 0) return Reduction::good;
  check(p != 2, Errc::ambiguous_reduction,
        "bad reduction at p = 2 needs an explicit bad_primes entry");
  if ((E.conductor / p) % p == 0) return Reduction::additive;
  int t = ap_legendre(E, p);
  check(t == 1 || t == -1, Errc::bad_prime,
        "multiplicative trace at p = " + std::to_string(p) + " is not +-1");
  return t == 1 ? Reduction::multiplicative_split : Reduction::multiplicative_nonsplit;
}

int trace_at(const Curve& E, std::int64_t p) {
  auto it = E.bad_override.find(p);
  if (it != E.bad_override.end()) {
    switch (it->second) {
      case Reduction::multiplicative_split: return 1;
      case Reduction::multiplicative_nonsplit: return -1;
      case Reduction::additive: return 0;
      case Reduction::good: break;  // fall through to the computed value
    }
  }
  bool bad = E.conductor % p == 0;
  if (!bad) {
    check(mod_reduce(E.discriminant(), p) != 0, Errc::ambiguous_reduction,
          "model is not minimal at p = " + std::to_string(p));
    int t = (p == 2) ? ap_bruteforce(E, 2) : ap_legendre(E, p);
    check(static_cast<double>(t) * t <= 4.0 * static_cast<double>(p), Errc::bad_prime,
          "trace at p = " + std::to_string(p) + " violates the Hasse bound");
    return t;
  }
  switch (reduction_at(E, p)) {
    case Reduction::multiplicative_split: return 1;
    case Reduction::multiplicative_nonsplit: return -1;
    case Reduction::additive: return 0;
    case Reduction::good:
      fail(Errc::bad_prime, "conductor divides p but reduction resolved good");
  }
  return 0;
}

}  // namespace twistlab
