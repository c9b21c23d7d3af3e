#pragma once
#include <array>
#include <cstdint>
#include <map>
#include <string>

namespace twistlab {

enum class Reduction { good, multiplicative_split, multiplicative_nonsplit, additive };

// Integral Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6,
// assumed minimal at every bad prime.  The conductor is taken as input and
// treated as authoritative; root_number is +1/-1 (0 = not yet known).
struct Curve {
  std::array<std::int64_t, 5> a{};  // a1, a2, a3, a4, a6
  std::int64_t conductor = 0;
  int root_number = 0;
  std::string name;
  std::map<std::int64_t, Reduction> bad_override;

  std::int64_t b2() const { return a[0] * a[0] + 4 * a[1]; }
  std::int64_t b4() const { return 2 * a[3] + a[0] * a[2]; }
  std::int64_t b6() const { return a[2] * a[2] + 4 * a[4]; }
  std::int64_t b8() const {
    return a[0] * a[0] * a[4] + 4 * a[1] * a[4] - a[0] * a[2] * a[3] +
           a[1] * a[2] * a[2] - a[3] * a[3];
  }
  std::int64_t c4() const { return b2() * b2() - 24 * b4(); }
  std::int64_t discriminant() const;
};

// Reduction type at p, using the conductor for good/multiplicative/additive
// and the trace sign to split the multiplicative case (odd p only).
Reduction reduction_at(const Curve& E, std::int64_t p);

// Trace of Frobenius by the quadratic-character sum over the completed
// square model; valid for every odd p when the model is minimal there.
int ap_legendre(const Curve& E, std::int64_t p);

// Trace by projective point count on the full Weierstrass model; any p,
// O(p^2), intended for small p and as an independent cross-check.
int ap_bruteforce(const Curve& E, std::int64_t p);

// A(p) with all the dispatch rules: configuration overrides win, p = 2 at a
// bad prime is refused without an override, non-minimal models are refused.
int trace_at(const Curve& E, std::int64_t p);

}  // namespace twistlab
