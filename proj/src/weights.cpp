#include "kstab/weights.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kstab/polysign.hpp"
#include "kstab/quad.hpp"
#include "kstab/rootfind.hpp"

namespace kstab {

double TabulatedWeight::operator()(double alpha) const {
  if (alpha <= samples.front().first) return samples.front().second;
  if (alpha >= samples.back().first) return samples.back().second;
  size_t i = 1;
  while (samples[i].first < alpha) ++i;
  const auto& [x0, y0] = samples[i - 1];
  const auto& [x1, y1] = samples[i];
  const double t = (alpha - x0) / (x1 - x0);
  return y0 + t * (y1 - y0);
}

WeightSpec WeightSpec::constant(const Rational& c) {
  WeightSpec g;
  g.terms_.push_back(ConstantWeight{c});
  return g;
}

WeightSpec WeightSpec::exponential(double eta) {
  WeightSpec g;
  g.terms_.push_back(ExponentialWeight{eta});
  return g;
}

WeightSpec WeightSpec::poly_exp(Poly p, double eta) {
  WeightSpec g;
  g.terms_.push_back(PolyExpWeight{std::move(p), eta});
  return g;
}

WeightSpec WeightSpec::tabulated(std::vector<std::pair<double, double>> samples) {
  WeightSpec g;
  g.terms_.push_back(TabulatedWeight{std::move(samples)});
  return g;
}

WeightSpec WeightSpec::plus(const WeightSpec& other) const {
  WeightSpec g = *this;
  g.terms_.insert(g.terms_.end(), other.terms_.begin(), other.terms_.end());
  return g;
}

bool WeightSpec::is_constant() const {
  for (const auto& t : terms_)
    if (!std::holds_alternative<ConstantWeight>(t)) return false;
  return !terms_.empty();
}

Rational WeightSpec::constant_value() const {
  Rational total(0);
  for (const auto& t : terms_) total += std::get<ConstantWeight>(t).c;
  return total;
}

double WeightSpec::operator()(double alpha) const {
  double total = 0.0;
  for (const auto& t : terms_) {
    if (const auto* c = std::get_if<ConstantWeight>(&t)) total += c->c.to_double();
    else if (const auto* e = std::get_if<ExponentialWeight>(&t)) total += std::exp(-e->eta * alpha);
    else if (const auto* pe = std::get_if<PolyExpWeight>(&t))
      total += pe->p.eval_double(alpha) * std::exp(-pe->eta * alpha);
    else
      total += (*std::get_if<TabulatedWeight>(&t))(alpha);
  }
  return total;
}

std::vector<double> WeightSpec::split_points() const {
  std::vector<double> pts;
  for (const auto& t : terms_)
    if (const auto* tab = std::get_if<TabulatedWeight>(&t))
      for (const auto& [x, y] : tab->samples) pts.push_back(x);
  return pts;
}

void WeightSpec::validate_on(const Interval& moment) const {
  if (terms_.empty()) throw Error(ErrorCode::ValidationError, "weight has no terms");
  for (const auto& t : terms_) {
    if (const auto* c = std::get_if<ConstantWeight>(&t)) {
      if (c->c.sign() <= 0)
        throw Error(ErrorCode::ValidationError, "constant weight must be positive");
    } else if (const auto* pe = std::get_if<PolyExpWeight>(&t)) {
      if (check_nonnegative(pe->p, moment.lo, moment.hi).outcome == SignOutcome::Violated ||
          pe->p(moment.lo).sign() <= 0 || pe->p(moment.hi).sign() <= 0 ||
          check_positive_interior(pe->p, moment.lo, moment.hi).outcome == SignOutcome::Violated)
        throw Error(ErrorCode::ValidationError, "poly-exp factor must be positive on the moment interval");
    } else if (const auto* tab = std::get_if<TabulatedWeight>(&t)) {
      const auto& ss = tab->samples;
      if (ss.size() < 8)
        throw Error(ErrorCode::ValidationError, "tabulated weight needs at least 8 samples");
      for (size_t i = 0; i < ss.size(); ++i) {
        if (ss[i].second <= 0.0)
          throw Error(ErrorCode::ValidationError, "tabulated weight values must be positive");
        if (i > 0 && !(ss[i - 1].first < ss[i].first))
          throw Error(ErrorCode::ValidationError, "tabulated samples must be strictly increasing");
      }
      if (ss.front().first > moment.lo.to_double() || ss.back().first < moment.hi.to_double())
        throw Error(ErrorCode::ValidationError, "tabulated samples must span the moment interval");
    }
    // exponential terms are positive everywhere
  }
}

std::string WeightSpec::describe() const {
  std::ostringstream os;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << " + ";
    const auto& t = terms_[i];
    if (const auto* c = std::get_if<ConstantWeight>(&t)) os << c->c.str();
    else if (const auto* e = std::get_if<ExponentialWeight>(&t)) os << "exp(-" << e->eta << "*a)";
    else if (const auto* pe = std::get_if<PolyExpWeight>(&t))
      os << "(" << pe->p.str("a") << ")*exp(-" << pe->eta << "*a)";
    else
      os << "tabulated[" << std::get_if<TabulatedWeight>(&t)->samples.size() << "]";
  }
  return os.str();
}

Scalar weighted_integral(const PiecewisePoly& density, const WeightSpec& g, const Interval& I) {
  Scalar total;
  for (const auto& t : g.terms()) {
    if (const auto* c = std::get_if<ConstantWeight>(&t)) {
      total += Scalar(c->c * density.integrate(I));
    } else if (const auto* e = std::get_if<ExponentialWeight>(&t)) {
      total += Scalar(density.exp_moment(e->eta, I));
    } else if (const auto* pe = std::get_if<PolyExpWeight>(&t)) {
      total += Scalar(density.times_poly(pe->p).exp_moment(pe->eta, I));
    } else {
      const auto* tab = std::get_if<TabulatedWeight>(&t);
      std::vector<double> splits;
      for (const Rational& b : density.breakpoints()) splits.push_back(b.to_double());
      for (const auto& [x, y] : tab->samples) splits.push_back(x);
      auto integrand = [&](double a) { return (*tab)(a)*density.eval_double(a); };
      total += Scalar(adaptive_simpson_split(integrand, I.lo.to_double(), I.hi.to_double(),
                                             splits, 1e-13));
    }
  }
  return total;
}

Scalar weighted_moment(const RefinedSeries& s, const WeightSpec& g, unsigned k) {
  g.validate_on(s.moment);
  const PiecewisePoly density = k == 0 ? s.vol : s.vol.times_poly(Poly::monomial(k));
  return weighted_integral(density, g, s.moment);
}

Scalar abs_alpha_moment(const RefinedSeries& s, const WeightSpec& g) {
  const PiecewisePoly density = s.vol.times_poly(Poly::monomial(1));
  Scalar total;
  if (s.moment.lo < Rational(0)) {
    const Interval neg(s.moment.lo, min(Rational(0), s.moment.hi));
    if (neg.lo < neg.hi) total += -weighted_integral(density.restricted(neg), g, neg);
  }
  if (s.moment.hi > Rational(0)) {
    const Interval pos(max(Rational(0), s.moment.lo), s.moment.hi);
    if (pos.lo < pos.hi) total += weighted_integral(density.restricted(pos), g, pos);
  }
  return total;
}

Scalar futaki_g(const RefinedSeries& s, const WeightSpec& g) {
  const Scalar volume = weighted_moment(s, g, 0);
  if (volume.sign() <= 0)
    throw Error(ErrorCode::DegenerateVolume, "weighted volume is not positive");
  return -weighted_moment(s, g, 1) / volume;
}

bool is_weight(const RefinedSeries& s, const WeightSpec& g, double tol) {
  const double moment1 = weighted_moment(s, g, 1).value();
  const double scale = abs_alpha_moment(s, g).value();
  return std::fabs(moment1) <= tol * scale;
}

namespace {

constexpr double kOverflowBound = 700.0;

// Root of offset + phi(eta) where phi(eta) = int a e^{-eta a} vol da.
// phi' = -int a^2 e^{-eta a} vol < 0, so the root is unique when it exists.
SolitonSolve solve_futaki_zero(const RefinedSeries& s, double offset, double tol) {
  require_valid(s);
  const PiecewisePoly alpha_vol = s.vol.times_poly(Poly::monomial(1));
  auto phi = [&](double eta) { return offset + alpha_vol.exp_moment(eta, s.moment); };

  const double reach = std::max(std::fabs(s.moment.lo.to_double()),
                                std::fabs(s.moment.hi.to_double()));
  const double eta_guard = kOverflowBound / std::max(reach, 1e-9);
  const bool one_sided = s.moment.lo.sign() >= 0 || s.moment.hi.sign() <= 0;

  int evals = 0;
  auto expand = [&](double start, int want_sign) {
    double x = start;
    while (true) {
      ++evals;
      if (phi(x) * want_sign > 0) return x;
      x *= 2;
      if (std::fabs(x) > eta_guard) {
        if (one_sided)
          throw Error(ErrorCode::NoRoot,
                      "moment interval lies on one side of 0; no exponential weight exists");
        throw Error(ErrorCode::NoConvergence, "bracket expansion hit the overflow guard");
      }
    }
  };
  const double lo = expand(-1.0, +1);
  const double hi = expand(1.0, -1);

  // residual target is scale-relative; the scale moves with eta, so solve,
  // check, and tighten if the first pass was not small enough
  auto scale_at = [&](double eta) {
    return abs_alpha_moment(s, WeightSpec::exponential(eta)).value();
  };
  double phi_tol = tol * scale_at(0.0);
  RootResult root{0.0, 0.0, 0};
  for (int attempt = 0; attempt < 4; ++attempt) {
    root = find_root_decreasing(phi, lo, hi, phi_tol);
    evals += root.iterations;
    if (std::fabs(root.phi_x) <= tol * scale_at(root.x))
      return {root.x, root.phi_x, evals};
    phi_tol *= 1e-3;
  }
  throw Error(ErrorCode::NoConvergence, "could not reach the requested soliton residual");
}

}  // namespace

SolitonSolve solve_soliton(const RefinedSeries& s, double tol) {
  return solve_futaki_zero(s, 0.0, tol);
}

WeightSpec weight_family(const RefinedSeries& s, const Rational& c, double tol) {
  if (c.sign() < 0)
    throw Error(ErrorCode::PreconditionFailed, "family parameter must be >= 0");
  if (c.is_zero()) return WeightSpec::exponential(solve_soliton(s, tol).eta0);
  const Rational moment1 = s.vol.moment(1, s.moment);
  const auto solved = solve_futaki_zero(s, (c * moment1).to_double(), tol);
  return WeightSpec::constant(c).plus(WeightSpec::exponential(solved.eta0));
}

}  // namespace kstab
