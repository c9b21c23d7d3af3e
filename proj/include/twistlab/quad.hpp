#pragma once
#include <functional>
#include <vector>

namespace twistlab {

struct GaussRule {
  std::vector<double> x;  // nodes on [-1, 1]
  std::vector<double> w;
};

// Gauss-Legendre rule of order n, computed once and cached.
const GaussRule& gauss_rule(int n);

// Fixed-panel integration of f over [a, b] with `panels` equal panels.
double integrate_panels(const std::function<double(double)>& f, double a,
                        double b, int panels, int order = 16);

// Adaptive bisection; error estimate per panel is |GL16 - GL32|.
// Throws Errc::quadrature_failure when max_depth is exhausted.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol, int max_depth = 28);

}  // namespace twistlab
