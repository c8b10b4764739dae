#include "kstab/quad.hpp"

#include <algorithm>
#include <cmath>

namespace kstab {

namespace {

double simpson(double fa, double fm, double fb, double h) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

double recurse(const std::function<double(double)>& f, double a, double b,
               double fa, double fm, double fb, double whole, double abs_tol,
               int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * abs_tol)
    return left + right + delta / 15.0;
  return recurse(f, a, m, fa, flm, fm, left, abs_tol / 2, depth - 1) +
         recurse(f, m, b, fm, frm, fb, right, abs_tol / 2, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol, int max_depth) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = simpson(fa, fm, fb, b - a);
  // scale the tolerance off a crude first estimate, with a floor so that
  // integrals near zero still terminate
  const double scale = std::max({std::fabs(whole), std::fabs(b - a) * std::fabs(fm), 1e-30});
  return recurse(f, a, b, fa, fm, fb, whole, rel_tol * scale, max_depth);
}

double adaptive_simpson_split(const std::function<double(double)>& f, double a, double b,
                              const std::vector<double>& split_points,
                              double rel_tol, int max_depth) {
  std::vector<double> knots = {a, b};
  for (double s : split_points)
    if (s > a && s < b) knots.push_back(s);
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
  double total = 0.0;
  for (size_t i = 0; i + 1 < knots.size(); ++i)
    total += adaptive_simpson(f, knots[i], knots[i + 1], rel_tol, max_depth);
  return total;
}

}  // namespace kstab
