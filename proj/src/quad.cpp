// ------------------------------------------------------------------
// Gauss-Legendre panel quadrature.
//
// Nodes are the roots of P_n found by Newton iteration from the
// Chebyshev initial guess; weights w = 2 / ((1-x^2) P_n'(x)^2).
// The adaptive driver bisects a panel whenever the GL16/GL32
// disagreement exceeds the panel's share of the tolerance.
// ------------------------------------------------------------------
#include "twistlab/quad.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "twistlab/errors.hpp"
#include "twistlab/util.hpp"

namespace twistlab {

namespace {

GaussRule make_rule(int n) {
  GaussRule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      // Legendre recurrence: (j+1) P_{j+1} = (2j+1) x P_j - j P_{j-1}.
      double p0 = 1.0, p1 = x;
      for (int j = 1; j < n; ++j) {
        double p2 = ((2.0 * j + 1.0) * x * p1 - j * p0) / (j + 1.0);
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.x[i] = -x;
    r.x[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    r.w[i] = w;
    r.w[n - 1 - i] = w;
  }
  return r;
}

double panel(const std::function<double(double)>& f, double a, double b,
             const GaussRule& r) {
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * f(mid + half * r.x[i]);
  return s * half;
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double tol, int depth, const GaussRule& lo, const GaussRule& hi) {
  double c = panel(f, a, b, lo);
  double fine = panel(f, a, b, hi);
  if (std::abs(fine - c) <= tol) return fine;
  if (depth <= 0)
    fail(Errc::quadrature_failure,
         "adaptive quadrature did not settle on [" + fmtg(a) + ", " + fmtg(b) + "]");
  double m = 0.5 * (a + b);
  return adapt(f, a, m, 0.5 * tol, depth - 1, lo, hi) +
         adapt(f, m, b, 0.5 * tol, depth - 1, lo, hi);
}

}  // namespace

const GaussRule& gauss_rule(int n) {
  static std::map<int, GaussRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_rule(n)).first;
  return it->second;
}

double integrate_panels(const std::function<double(double)>& f, double a,
                        double b, int panels, int order) {
  const GaussRule& r = gauss_rule(order);
  double s = 0.0, h = (b - a) / panels;
  for (int i = 0; i < panels; ++i) s += panel(f, a + i * h, a + (i + 1) * h, r);
  return s;
}

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol, int max_depth) {
  if (a == b) return 0.0;
  return adapt(f, a, b, tol, max_depth, gauss_rule(16), gauss_rule(32));
}

}  // namespace twistlab
