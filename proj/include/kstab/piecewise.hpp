#pragma once

#include <string>
#include <vector>

#include "kstab/poly.hpp"
#include "kstab/rational.hpp"

namespace kstab {

struct Interval {
  Rational lo, hi;

  Interval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (lo > hi) throw Error(ErrorCode::InvalidInterval, "interval with lo > hi");
  }

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }

  friend bool operator==(const Interval& a, const Interval& b) = default;
};

// Piecewise polynomial over a breakpoint grid b_0 < b_1 < ... < b_k.
// Piece i governs [b_i, b_{i+1}]; evaluation at an interior breakpoint uses
// the right piece, the last breakpoint uses the last piece. Continuity is
// NOT an invariant; integration never depends on the convention.
class PiecewisePoly {
public:
  PiecewisePoly(std::vector<Rational> breakpoints, std::vector<Poly> pieces);

  static PiecewisePoly constant(const Rational& c, const Interval& dom);
  static PiecewisePoly single(Poly p, const Interval& dom);

  Interval domain() const { return Interval(bps_.front(), bps_.back()); }
  size_t piece_count() const { return pieces_.size(); }
  const std::vector<Rational>& breakpoints() const { return bps_; }
  const Poly& piece(size_t i) const { return pieces_[i]; }

  size_t piece_index(const Rational& x) const;
  Rational operator()(const Rational& x) const;
  // Clamps to the domain; intended for density callables sampled in floats.
  double eval_double(double x) const;

  // Exact integral over I (I must lie inside the domain).
  Rational integrate(const Interval& I) const;
  // Exact integral of x^k * f(x) over I.
  Rational moment(unsigned k, const Interval& I) const;
  // Integral of f(x) * exp(-eta x) over I, evaluated by per-piece closed
  // forms; only the final exponential evaluations are floating point.
  double exp_moment(double eta, const Interval& I, double overflow_bound = 700.0) const;

  PiecewisePoly restricted(const Interval& I) const;
  PiecewisePoly times_poly(const Poly& p) const;
  PiecewisePoly scaled(const Rational& c) const;
  PiecewisePoly apply(const auto& fn) const {
    std::vector<Poly> out;
    out.reserve(pieces_.size());
    for (const Poly& p : pieces_) out.push_back(fn(p));
    return PiecewisePoly(bps_, std::move(out));
  }

  friend PiecewisePoly pw_add(const PiecewisePoly& a, const PiecewisePoly& b);
  friend PiecewisePoly pw_mul(const PiecewisePoly& a, const PiecewisePoly& b);

  friend bool operator==(const PiecewisePoly& a, const PiecewisePoly& b) {
    return a.bps_ == b.bps_ && a.pieces_ == b.pieces_;
  }

  std::string str(const std::string& var = "x") const;

private:
  std::vector<Rational> bps_;
  std::vector<Poly> pieces_;
};

inline Rational pw_integrate(const PiecewisePoly& f, const Interval& I) { return f.integrate(I); }
inline Rational pw_moment(const PiecewisePoly& f, unsigned k, const Interval& I) { return f.moment(k, I); }
inline PiecewisePoly pw_scale(const PiecewisePoly& f, const Rational& c) { return f.scaled(c); }

}  // namespace kstab
