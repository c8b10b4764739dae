#include "kstab/rootfind.hpp"

#include <cmath>

namespace kstab {

RootResult find_root_decreasing(const std::function<double(double)>& phi,
                                double lo, double hi, double tol,
                                int max_iterations) {
  if (!(lo < hi)) throw Error(ErrorCode::BadBracket, "empty bracket");
  double f_lo = phi(lo);
  double f_hi = phi(hi);
  if (f_lo == 0.0) return {lo, 0.0, 0};
  if (f_hi == 0.0) return {hi, 0.0, 0};
  if (!(f_lo > 0.0 && f_hi < 0.0))
    throw Error(ErrorCode::BadBracket, "need phi(lo) > 0 > phi(hi)");

  double best_x = lo, best_f = f_lo;
  for (int iter = 1; iter <= max_iterations; ++iter) {
    const double width = hi - lo;
    double cand = lo + width / 2;
    // secant proposal from the bracket endpoints; accept only strictly inside
    const double denom = f_lo - f_hi;
    if (denom > 0.0) {
      const double secant = lo + width * (f_lo / denom);
      const double margin = 0.01 * width;
      if (secant > lo + margin && secant < hi - margin) cand = secant;
    }
    const double f_cand = phi(cand);
    if (std::fabs(f_cand) < std::fabs(best_f)) { best_x = cand; best_f = f_cand; }
    if (std::fabs(f_cand) <= tol) return {cand, f_cand, iter};
    if (f_cand > 0.0) { lo = cand; f_lo = f_cand; }
    else { hi = cand; f_hi = f_cand; }
    if (hi - lo <= tol) {
      const double mid = lo + (hi - lo) / 2;
      const double f_mid = phi(mid);
      if (std::fabs(f_mid) < std::fabs(best_f)) { best_x = mid; best_f = f_mid; }
      return {best_x, best_f, iter};
    }
  }
  throw Error(ErrorCode::NoConvergence, "root finder exceeded iteration cap");
}

}  // namespace kstab
