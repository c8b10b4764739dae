#include "kstab/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace kstab {

PiecewisePoly::PiecewisePoly(std::vector<Rational> breakpoints, std::vector<Poly> pieces)
    : bps_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (bps_.size() < 2 || pieces_.size() + 1 != bps_.size())
    throw Error(ErrorCode::InvalidInterval, "piecewise data needs k+1 breakpoints for k pieces");
  for (size_t i = 0; i + 1 < bps_.size(); ++i)
    if (!(bps_[i] < bps_[i + 1]))
      throw Error(ErrorCode::InvalidInterval, "breakpoints must be strictly increasing");
}

PiecewisePoly PiecewisePoly::constant(const Rational& c, const Interval& dom) {
  return single(Poly::constant(c), dom);
}

PiecewisePoly PiecewisePoly::single(Poly p, const Interval& dom) {
  if (dom.lo == dom.hi)
    throw Error(ErrorCode::InvalidInterval, "degenerate piecewise domain");
  return PiecewisePoly({dom.lo, dom.hi}, {std::move(p)});
}

size_t PiecewisePoly::piece_index(const Rational& x) const {
  if (!domain().contains(x))
    throw Error(ErrorCode::IntervalOutOfDomain, "evaluation point outside domain");
  // right-piece convention; the final breakpoint belongs to the last piece
  size_t lo = 0, hi = pieces_.size() - 1;
  while (lo < hi) {
    size_t mid = (lo + hi + 1) / 2;
    if (bps_[mid] <= x) lo = mid; else hi = mid - 1;
  }
  return lo;
}

Rational PiecewisePoly::operator()(const Rational& x) const {
  return pieces_[piece_index(x)](x);
}

double PiecewisePoly::eval_double(double x) const {
  const double lo = bps_.front().to_double(), hi = bps_.back().to_double();
  if (x <= lo) return pieces_.front().eval_double(std::max(x, lo));
  if (x >= hi) return pieces_.back().eval_double(std::min(x, hi));
  size_t i = 0;
  while (i + 1 < pieces_.size() && bps_[i + 1].to_double() <= x) ++i;
  return pieces_[i].eval_double(x);
}

Rational PiecewisePoly::integrate(const Interval& I) const {
  if (!domain().contains(I))
    throw Error(ErrorCode::IntervalOutOfDomain,
                "integration interval [" + I.lo.str() + ", " + I.hi.str() + "] exceeds domain");
  Rational total(0);
  for (size_t i = 0; i < pieces_.size(); ++i) {
    Rational lo = max(bps_[i], I.lo);
    Rational hi = min(bps_[i + 1], I.hi);
    if (lo >= hi) continue;
    Poly F = pieces_[i].antiderivative();
    total += F(hi) - F(lo);
  }
  return total;
}

Rational PiecewisePoly::moment(unsigned k, const Interval& I) const {
  if (k == 0) return integrate(I);
  return times_poly(Poly::monomial(k)).integrate(I);
}

namespace {

// Closed form of int p(x) e^{-eta x} dx on [a, b] by repeated integration by
// parts: the antiderivative is -e^{-eta x} * sum_k p^{(k)}(x) / eta^{k+1}.
// All derivative evaluations stay exact; only the exponentials and the final
// sum are floating point. Well conditioned once |eta| * (b - a) is not small.
double exp_integral_by_parts(const Poly& p, double eta, const Rational& a, const Rational& b) {
  double sum_a = 0.0, sum_b = 0.0;
  double eta_pow = eta;
  Poly d = p;
  while (!d.is_zero()) {
    sum_a += d(a).to_double() / eta_pow;
    sum_b += d(b).to_double() / eta_pow;
    eta_pow *= eta;
    d = d.derivative();
  }
  return std::exp(-eta * a.to_double()) * sum_a - std::exp(-eta * b.to_double()) * sum_b;
}

// Same integral by a Taylor expansion of the exponential about the interval
// midpoint: e^{-eta m} * sum_j (-eta)^j / j! * int_{-h}^{h} u^j p(u+m) du.
// The shifted moments are exact rationals. Used when |eta| * h <= 1, where
// the by-parts form loses digits to cancellation; here successive terms
// shrink geometrically and the sum is stable.
double exp_integral_series(const Poly& p, double eta, const Rational& a, const Rational& b) {
  const Rational m = (a + b) / Rational(2);
  const Rational h = (b - a) / Rational(2);
  const Poly q = p.shifted(m);

  // powers h^{i+1} on demand
  std::vector<Rational> hpow = {h};
  auto h_to = [&](size_t n) {
    while (hpow.size() < n) hpow.push_back(hpow.back() * h);
    return hpow[n - 1];
  };

  const int deg = q.degree();
  double total = 0.0, term_scale = 1.0;  // term_scale = (-eta)^j / j!
  double prev_mag = std::numeric_limits<double>::infinity();
  for (int j = 0; j < 90; ++j) {
    // M_j = int_{-h}^{h} u^j q(u) du, exact
    Rational mj(0);
    for (int i = 0; i <= deg; ++i) {
      int e = i + j + 1;
      if (e % 2 != 0) {  // odd power of u integrates to twice the half-range value
        mj += q.coeff(i) * Rational(2) * h_to(e) / Rational(e);
      }
    }
    const double term = term_scale * mj.to_double();
    total += term;
    // a single term may vanish by parity or pass through zero, so stop only
    // on two consecutive negligible terms
    if (j > deg + 1 && std::abs(term) + prev_mag <= 1e-18 * std::abs(total)) break;
    prev_mag = std::abs(term);
    term_scale *= -eta / (j + 1);
  }
  return std::exp(-eta * m.to_double()) * total;
}

}  // namespace

double PiecewisePoly::exp_moment(double eta, const Interval& I, double overflow_bound) const {
  if (!domain().contains(I))
    throw Error(ErrorCode::IntervalOutOfDomain, "exp moment interval exceeds domain");
  const double reach = std::max(std::fabs(I.lo.to_double()), std::fabs(I.hi.to_double()));
  if (std::fabs(eta) * reach > overflow_bound)
    throw Error(ErrorCode::Overflow, "exp weight exceeds overflow guard");
  if (eta == 0.0) return integrate(I).to_double();

  double total = 0.0;
  for (size_t i = 0; i < pieces_.size(); ++i) {
    Rational lo = max(bps_[i], I.lo);
    Rational hi = min(bps_[i + 1], I.hi);
    if (lo >= hi) continue;
    const double half_width = (hi - lo).to_double() / 2.0;
    if (std::fabs(eta) * half_width <= 1.0)
      total += exp_integral_series(pieces_[i], eta, lo, hi);
    else
      total += exp_integral_by_parts(pieces_[i], eta, lo, hi);
  }
  return total;
}

PiecewisePoly PiecewisePoly::restricted(const Interval& I) const {
  if (!domain().contains(I))
    throw Error(ErrorCode::IntervalOutOfDomain, "restriction exceeds domain");
  if (I.lo == I.hi)
    throw Error(ErrorCode::InvalidInterval, "degenerate restriction");
  std::vector<Rational> bps;
  std::vector<Poly> pieces;
  for (size_t i = 0; i < pieces_.size(); ++i) {
    Rational lo = max(bps_[i], I.lo);
    Rational hi = min(bps_[i + 1], I.hi);
    if (lo >= hi) continue;
    if (bps.empty()) bps.push_back(lo);
    bps.push_back(hi);
    pieces.push_back(pieces_[i]);
  }
  return PiecewisePoly(std::move(bps), std::move(pieces));
}

PiecewisePoly PiecewisePoly::times_poly(const Poly& p) const {
  std::vector<Poly> out;
  out.reserve(pieces_.size());
  for (const Poly& q : pieces_) out.push_back(q * p);
  return PiecewisePoly(bps_, std::move(out));
}

PiecewisePoly PiecewisePoly::scaled(const Rational& c) const {
  std::vector<Poly> out;
  out.reserve(pieces_.size());
  for (const Poly& q : pieces_) out.push_back(c * q);
  return PiecewisePoly(bps_, std::move(out));
}

namespace {

std::vector<Rational> merged_breakpoints(const PiecewisePoly& a, const PiecewisePoly& b) {
  std::vector<Rational> merged;
  merged.reserve(a.breakpoints().size() + b.breakpoints().size());
  std::merge(a.breakpoints().begin(), a.breakpoints().end(),
             b.breakpoints().begin(), b.breakpoints().end(), std::back_inserter(merged));
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  return merged;
}

template <typename Combine>
PiecewisePoly pw_binary(const PiecewisePoly& a, const PiecewisePoly& b, Combine&& combine) {
  if (!(a.domain() == b.domain()))
    throw Error(ErrorCode::DomainMismatch, "piecewise operands have different domains");
  std::vector<Rational> bps = merged_breakpoints(a, b);
  std::vector<Poly> pieces;
  pieces.reserve(bps.size() - 1);
  for (size_t i = 0; i + 1 < bps.size(); ++i)
    pieces.push_back(combine(a.piece(a.piece_index(bps[i])), b.piece(b.piece_index(bps[i]))));
  return PiecewisePoly(std::move(bps), std::move(pieces));
}

}  // namespace

PiecewisePoly pw_add(const PiecewisePoly& a, const PiecewisePoly& b) {
  return pw_binary(a, b, [](const Poly& p, const Poly& q) { return p + q; });
}

PiecewisePoly pw_mul(const PiecewisePoly& a, const PiecewisePoly& b) {
  return pw_binary(a, b, [](const Poly& p, const Poly& q) { return p * q; });
}

std::string PiecewisePoly::str(const std::string& var) const {
  std::ostringstream os;
  for (size_t i = 0; i < pieces_.size(); ++i) {
    if (i) os << ";  ";
    os << pieces_[i].str(var) << " on [" << bps_[i].str() << ", " << bps_[i + 1].str() << "]";
  }
  return os.str();
}

}  // namespace kstab
