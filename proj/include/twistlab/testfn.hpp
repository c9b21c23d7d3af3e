#pragma once
#include <string>
#include <vector>

namespace twistlab {

// A parsed even test-function pair request: "fejer:X" or
// "bump:Q=...,a=...,b=...".  Defaults for omitted bump fields are the
// symmetric unit window a = -1, b = 1.
struct PairSpec {
  enum class Kind { fejer, bump };
  Kind kind = Kind::fejer;
  double X = 1.0;                       // fejer: triangle half-width in x
  double Q = 1.0, a = -1.0, b = 1.0;    // bump: smoothing scale and window
};

PairSpec parse_pair(const std::string& text);

// Process-wide grids for the C-infinity bump machinery:
//
//   f0(x) = C exp(-1/(1 - 4x^2)) on |x| < 1/2,
//   f    = f0 * f0 (convolution; support [-1, 1], f(0) = 1/(2 pi)),
//   fhat(r) = (fhat0(r))^2 >= 0 by construction, with total mass 1,
//   Phi(u) = int_{-inf}^u fhat,   1 - Phi(u) <= tail(u) for u >= 0.
//
// fhat0 is computed by a trapezoid rule whose aliasing error is far below
// double precision (the integrand is smooth and compactly supported), the
// grids are cubic-interpolated, and everything is built once per process.
class BumpTable {
 public:
  static const BumpTable& instance();

  double f0(double x) const;    // closed form
  double f(double x) const;     // grid on [0, 1], step 1/1024; even
  double fhat(double r) const;  // grid on [0, 400], step 1/256; even
  double phi(double u) const;   // Phi(-u) = 1 - Phi(u); phi(u > 400) = 1
  double tail(double u) const;  // certified decreasing bound on 1 - Phi(u)
  double fhat_mass() const;     // grid integral of fhat (should be 1)

 private:
  BumpTable();
  std::vector<double> f_grid_, fhat_grid_, phi_grid_;
  double c0_ = 0;      // normalization constant of f0
  double mass_ = 0;    // integral of fhat over the grid
  double tail_k_ = 0;  // prefactor of the K e^{-c sqrt(u)} tail bound
};

// Catmull-Rom cubic on a uniform grid starting at 0, with a caller-supplied
// virtual node left of index 0 (pass y[1] for even grids); clamps to the
// last node beyond the right end.  Shared by every gridded kernel here.
double cubic_at(const std::vector<double>& y, double step, double v,
                double y_left);

// An admissible even pair (g, h) with h(r) = int g(x) e^{irx} dx.  For
// asymmetric bump windows the pair delivered is the even part (g_e, h_e);
// the spectral-side identities only ever consume even test functions.
class TestPair {
 public:
  explicit TestPair(const PairSpec& spec);
  explicit TestPair(const std::string& text) : TestPair(parse_pair(text)) {}

  double h(double r) const;
  double g(double x) const;
  double support() const;  // half-width of supp g
  // Decreasing majorant of |h| on [r, infinity); drives tail certificates.
  double h_tail_envelope(double r) const;
  const PairSpec& spec() const { return spec_; }

 private:
  PairSpec spec_;
};

}  // namespace twistlab
