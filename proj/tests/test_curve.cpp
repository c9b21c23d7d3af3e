#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "twistlab/coefficients.hpp"
#include "twistlab/curve.hpp"
#include "twistlab/errors.hpp"

using namespace twistlab;

TEST_CASE("b-invariants and discriminant") {
  Curve E = curve_11a();
  CHECK(E.b2() == -4);
  CHECK(E.b4() == -20);
  CHECK(E.b6() == -79);
  CHECK(E.b8() == -21);
  CHECK(E.c4() == 496);
  CHECK(E.discriminant() == -161051);  // -11^5

  Curve F = curve_37a();
  CHECK(F.b2() == 0);
  CHECK(F.b4() == -2);
  CHECK(F.b6() == 1);
  CHECK(F.b8() == -1);
  CHECK(F.c4() == 48);
  CHECK(F.discriminant() == 37);
}

TEST_CASE("reduction classification at the bad prime") {
  CHECK(reduction_at(curve_11a(), 11) == Reduction::multiplicative_split);
  CHECK(reduction_at(curve_37a(), 37) == Reduction::multiplicative_nonsplit);
  CHECK(reduction_at(curve_11a(), 2) == Reduction::good);
  CHECK(reduction_at(curve_11a(), 3) == Reduction::good);
  CHECK(reduction_at(curve_37a(), 5) == Reduction::good);
}

TEST_CASE("frozen traces of Frobenius") {
  Curve E = curve_11a();
  CHECK(trace_at(E, 2) == -2);
  CHECK(trace_at(E, 3) == -1);
  CHECK(trace_at(E, 5) == 1);
  CHECK(trace_at(E, 7) == -2);
  CHECK(trace_at(E, 13) == 4);
  CHECK(trace_at(E, 11) == 1);  // split multiplicative

  Curve F = curve_37a();
  CHECK(trace_at(F, 2) == -2);
  CHECK(trace_at(F, 3) == -3);
  CHECK(trace_at(F, 5) == -2);
  CHECK(trace_at(F, 37) == -1);  // nonsplit multiplicative
}

TEST_CASE("character-sum trace equals the point-count trace") {
  for (const Curve& E : {curve_11a(), curve_37a()}) {
    for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                           53, 59, 61, 67, 71, 73, 79, 83, 89, 97}) {
      CHECK(ap_legendre(E, p) == ap_bruteforce(E, p));
    }
  }
}

TEST_CASE("Hasse bound on random good primes") {
  auto primes = primes_up_to(10000);
  std::mt19937 rng(40921);
  std::uniform_int_distribution<size_t> pick(0, primes.size() - 1);
  Curve E = curve_11a();
  Curve F = curve_37a();
  for (int i = 0; i < 50; ++i) {
    std::int64_t p = primes[pick(rng)];
    if (p == 2) continue;
    if (p != 11) CHECK(static_cast<double>(std::abs(ap_legendre(E, p))) <= 2.0 * std::sqrt(p));
    if (p != 37) CHECK(static_cast<double>(std::abs(ap_legendre(F, p))) <= 2.0 * std::sqrt(p));
  }
}

TEST_CASE("Hecke recursion matches the closed Chebyshev form at prime powers") {
  for (const Curve& E : {curve_11a(), curve_37a()}) {
    auto A = coeff_A(E, 6000);
    for (std::int64_t p : {2, 3, 5, 7}) {
      double ap = static_cast<double>(A[p]);
      double theta = std::acos(ap / (2.0 * std::sqrt(static_cast<double>(p))));
      std::int64_t pk = p;
      int k = 1;
      while (pk * p <= 6000) {
        pk *= p;
        ++k;
        // A(p^k) = p^{k/2} sin((k+1) theta) / sin(theta)
        double want = std::pow(static_cast<double>(p), 0.5 * k) *
                      std::sin((k + 1) * theta) / std::sin(theta);
        CHECK(std::abs(static_cast<double>(A[pk]) - want) < 1e-9 * (1.0 + std::abs(want)));
      }
    }
  }
}

TEST_CASE("multiplicativity of the coefficient sieve") {
  for (const Curve& E : {curve_11a(), curve_37a()}) {
    auto A = coeff_A(E, 3600);
    for (std::int64_t m = 2; m <= 60; ++m)
      for (std::int64_t n = 2; n <= 60; ++n) {
        if (std::gcd(m, n) != 1) continue;
        CHECK(A[m * n] == A[m] * A[n]);
      }
  }
}

TEST_CASE("frozen composite coefficients") {
  auto A = coeff_A(curve_11a(), 16);
  CHECK(A[1] == 1);
  CHECK(A[4] == 2);    // A(2)^2 - 2
  CHECK(A[9] == -2);   // A(3)^2 - 3
  CHECK(A[6] == 2);    // A(2) A(3)
  CHECK(A[8] == 0);    // A(2) A(4) - 2 A(2)
  CHECK(A[16] == -4);  // A(2) A(8) - 2 A(4)
}

TEST_CASE("bad-prime overrides take precedence") {
  Curve E = curve_11a();
  E.bad_override[11] = Reduction::additive;
  CHECK(trace_at(E, 11) == 0);
  E.bad_override[11] = Reduction::multiplicative_nonsplit;
  CHECK(trace_at(E, 11) == -1);
  auto A = coeff_A(E, 4);
  CHECK(A[2] == -2);  // good primes unaffected
}

TEST_CASE("bad reduction at p = 2 is refused without an override") {
  Curve E;
  E.a = {0, 0, 0, 0, 1};  // discriminant -432, even conductor
  E.conductor = 36;
  E.root_number = 1;
  CHECK_THROWS_AS(trace_at(E, 2), Error);
  try {
    trace_at(E, 2);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ambiguous_reduction);
    CHECK(exit_code(e.code()) == 1);
  }
  E.bad_override[2] = Reduction::additive;
  CHECK(trace_at(E, 2) == 0);
}

TEST_CASE("non-minimal model is detected") {
  // y^2 = x^3 - 2^8 3^4: same j as a minimal model but disc divisible by 2, 3
  // while the claimed conductor is odd and coprime to 3.
  Curve E;
  E.a = {0, 0, 0, 0, -20736};
  E.conductor = 11;  // deliberately inconsistent
  E.root_number = 1;
  CHECK_THROWS_AS(trace_at(E, 2), Error);
  CHECK_THROWS_AS(trace_at(E, 3), Error);
  CHECK(trace_at(E, 5) != -100);  // 5 is fine: disc not divisible by 5
}

TEST_CASE("prime sieve sanity") {
  auto p = primes_up_to(100);
  CHECK(p.size() == 25);
  CHECK(p.front() == 2);
  CHECK(p.back() == 97);
}
