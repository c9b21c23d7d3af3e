#pragma once
#include <cstdio>
#include <numbers>
#include <string>

namespace twistlab {

inline constexpr double kPi = std::numbers::pi_v<double>;
inline constexpr double kEulerGamma = std::numbers::egamma_v<double>;

// All human-readable numeric output goes through one formatter so that a
// repeated run reproduces files byte for byte.
inline std::string fmtg(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline double sqr(double x) { return x * x; }

}  // namespace twistlab
