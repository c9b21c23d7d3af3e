#include "twistlab/discriminant.hpp"

#include <cstdlib>

namespace twistlab {

int kronecker(std::int64_t d, std::int64_t n) {
  // (d | 0) is 1 only for d = +/-1.
  if (n == 0) return (d == 1 || d == -1) ? 1 : 0;
  int sign = 1;
  if (n < 0) {
    n = -n;
    if (d < 0) sign = -sign;
  }
  // Split off the even part of n: (d | 2) = 0, 1, -1 for d = 0, +/-1, +/-3 mod 8.
  while ((n & 1) == 0) {
    n >>= 1;
    std::int64_t m = d & 7;
    if ((d & 1) == 0) return 0;
    if (m == 3 || m == 5) sign = -sign;
  }
  // Now n is odd and positive: Jacobi with quadratic reciprocity.
  d %= n;
  if (d < 0) d += n;
  while (d != 0) {
    while ((d & 1) == 0) {
      d >>= 1;
      std::int64_t m = n & 7;
      if (m == 3 || m == 5) sign = -sign;
    }
    std::int64_t t = d;
    d = n;
    n = t;
    if ((d & 3) == 3 && (n & 3) == 3) sign = -sign;
    d %= n;
  }
  return n == 1 ? sign : 0;
}

bool is_squarefree(std::int64_t n) {
  if (n < 0) n = -n;
  if (n == 0) return false;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return false;
    }
  }
  return true;
}

bool is_fundamental(std::int64_t d) {
  if (d == 0 || d == 1) return false;
  std::int64_t r = d % 4;
  if (r < 0) r += 4;
  if (r == 1) return is_squarefree(d);
  if (r != 0) return false;
  std::int64_t m = d / 4;
  std::int64_t rm = m % 4;
  if (rm < 0) rm += 4;
  return (rm == 2 || rm == 3) && is_squarefree(m);
}

std::vector<std::int64_t> fundamental_range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = lo; d <= hi; ++d)
    if (is_fundamental(d)) out.push_back(d);
  return out;
}

}  // namespace twistlab
