#pragma once
#include <complex>

namespace twistlab {

using cplx = std::complex<double>;

// Principal-branch log-gamma for complex z (Lanczos; reflection below
// Re z = 0.5).  ~1e-14 relative away from the poles.
cplx log_gamma(cplx z);

// Gamma(z) = exp(log_gamma(z)).
cplx gamma_fn(cplx z);

// Digamma psi(z); accurate to ~1e-13 for Re z > -20 away from poles.
cplx digamma(cplx z);

// |Gamma(1 + i t)| = sqrt(pi t / sinh(pi t)), evaluated without overflow
// and with a series guard for small t.
double gamma_abs_one_plus_it(double t);

// Upper incomplete gamma Gamma(a, x) for complex a (|a| <= ~4.5) and real
// x > 0.  Four stability routes; ~1e-13 relative.
cplx upper_gamma(cplx a, double x);

// Which route upper_gamma takes (1 = continued fraction, 2 = small-|a|
// expansion, 3 = Gamma(a) - lower series, 4 = shift + downward recurrence).
// Exposed so the route seams can be probed directly.
int upper_gamma_route(cplx a, double x);

}  // namespace twistlab
