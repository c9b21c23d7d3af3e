#pragma once
#include <cstdint>
#include <set>
#include <vector>

#include "twistlab/curve.hpp"

namespace twistlab {

// A quadratic twist of the base curve by a fundamental discriminant d
// coprime to the conductor.  cond = M d^2, q0 = sqrt(cond)/(2 pi).
// Owns its copy of the curve so a Twist never outlives its base data.
struct Twist {
  Curve E;
  std::int64_t d = 1;
  std::int64_t cond = 0;
  double q0 = 0.0;
  int w = 0;  // sign of the functional equation, from the character formula
};

// Validates d (fundamental or 1, coprime to M, inside the supported range)
// and fills in the derived fields.  Requires E.root_number to be set.
Twist make_twist(const Curve& E, std::int64_t d);

// chi_d(-M) * w_E.
int twist_sign(const Curve& E, std::int64_t d);

// Measured self-duality ratio of the twisted coefficient series at the
// symmetry point of its exponential sum; equals the functional-equation
// sign when everything upstream is consistent.  Throws sign_ambiguous
// when |r| is not within 1e-4 of 1 at every probe abscissa.
double fricke_ratio(const Curve& E, std::int64_t d);
int numeric_sign(const Curve& E, std::int64_t d);

// Genus membership: gcd(d, 2 M d0) = 1, d0 d < 0, and d0 d mod 4M is a
// square mod 4M.  d0 must be fundamental and coprime to 2M.
bool genus_member(const Curve& E, std::int64_t d0, std::int64_t d);
std::set<std::int64_t> squares_mod(std::int64_t m);

}  // namespace twistlab
