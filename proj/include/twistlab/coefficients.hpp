#pragma once
#include <cstdint>
#include <memory>
#include <vector>

#include "twistlab/curve.hpp"

namespace twistlab {

std::vector<std::int32_t> primes_up_to(std::int64_t limit);

// A(p) for every prime p <= limit, index-aligned with primes_up_to(limit)
// (and with any longer prime list, of which it is a prefix).  Cached per
// curve; the cache only grows, and the snapshot is safe to hold across a
// concurrent regrow.
std::shared_ptr<const std::vector<std::int32_t>> ap_table(const Curve& E,
                                                          std::int64_t limit);

// Exact A(n) for n = 1..count (index 0 unused), filled multiplicatively:
// good p:  A(p^k) = A(p) A(p^{k-1}) - p A(p^{k-2});
// bad  p:  A(p^k) = A(p)^k.
std::vector<std::int64_t> coeff_A(const Curve& E, std::int64_t count);

// Twisted, analytically normalized coefficients a_d(n) = chi_d(n) A(n)/sqrt(n).
std::vector<double> twisted_a(const Curve& E, std::int64_t d, std::int64_t count);

}  // namespace twistlab
