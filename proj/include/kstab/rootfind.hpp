#pragma once

#include <functional>

#include "kstab/errors.hpp"

namespace kstab {

struct RootResult {
  double x;
  double phi_x;
  int iterations;
};

// Root of a strictly decreasing function with phi(lo) > 0 > phi(hi).
// Bisection-first; a secant step is taken only when it lands strictly
// inside the current bracket. Stops when |phi(x)| <= tol or the bracket
// width is <= tol. Deterministic for a given phi.
RootResult find_root_decreasing(const std::function<double(double)>& phi,
                                double lo, double hi, double tol,
                                int max_iterations = 200);

}  // namespace kstab
