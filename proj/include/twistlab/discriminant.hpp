#pragma once
#include <cstdint>
#include <vector>

namespace twistlab {

// Kronecker symbol (d | n), extended to all integers.
int kronecker(std::int64_t d, std::int64_t n);

// Fundamental discriminant test: d = 1 (mod 4) squarefree with d != 1,
// or d = 4m with m = 2, 3 (mod 4) squarefree.
bool is_fundamental(std::int64_t d);

// All fundamental discriminants d with lo <= d <= hi, ascending.
std::vector<std::int64_t> fundamental_range(std::int64_t lo, std::int64_t hi);

bool is_squarefree(std::int64_t n);

}  // namespace twistlab
