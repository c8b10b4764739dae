#pragma once

#include <functional>
#include <vector>

namespace kstab {

// Adaptive Simpson quadrature with Richardson acceptance. Used for
// tabulated-weight integration and as the floating-point cross-check
// against the exact antiderivative route; it only ever samples the
// integrand pointwise.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol = 1e-12, int max_depth = 48);

// Integrates piecewise-smooth functions by splitting at the given points
// first (points outside (a, b) are ignored).
double adaptive_simpson_split(const std::function<double(double)>& f, double a, double b,
                              const std::vector<double>& split_points,
                              double rel_tol = 1e-12, int max_depth = 48);

}  // namespace kstab
