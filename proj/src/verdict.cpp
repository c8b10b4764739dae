#include "kstab/verdict.hpp"

#include <cmath>

namespace kstab {

std::string to_string(Level level) {
  switch (level) {
    case Level::KStable: return "K-stable";
    case Level::KPolystable: return "K-polystable";
    case Level::KSemistableNotPolystable: return "K-semistable-not-polystable";
    case Level::KUnstable: return "K-unstable";
  }
  return "?";
}

namespace {

// three-way sign of a scalar with a relative guard for inexact values
int fuzzy_sign(const Scalar& v) {
  if (v.is_exact()) return v.sign();
  const double x = v.value();
  const double eps = 1e-12 * std::max(1.0, std::fabs(x));
  if (x > eps) return 1;
  if (x < -eps) return -1;
  return 0;
}

bool fuzzy_equal(const Scalar& a, const Scalar& b) { return fuzzy_sign(a - b) == 0; }

}  // namespace

Verdict li_classify(std::vector<WeightedCoeff> coefficients) {
  // zero-mass points do not constrain anything
  std::erase_if(coefficients, [](const WeightedCoeff& c) { return fuzzy_sign(c.coeff) == 0; });

  Verdict v;
  v.certificate.coefficients = coefficients;

  Scalar total;
  for (const auto& c : coefficients) {
    if (fuzzy_sign(c.coeff - Scalar(Rational(1))) >= 0)
      throw Error(ErrorCode::NotLogFano, "coefficient at '" + c.label + "' is >= 1");
    total += c.coeff;
  }
  if (fuzzy_sign(total - Scalar(Rational(2))) >= 0)
    throw Error(ErrorCode::NotLogFano, "boundary coefficients sum to >= 2");

  if (coefficients.empty()) {
    v.level = Level::KPolystable;
    v.certificate.rule = "no boundary: the bare line is K-polystable";
    v.certificate.delta = Scalar(Rational(1));
    return v;
  }

  // delta = 2 min_i (1 - a_i) / (2 - sum a); the level is the sign of the
  // minimal slack sum_{j != i} a_j - a_i
  size_t worst = 0;
  for (size_t i = 1; i < coefficients.size(); ++i)
    if (coefficients[i].coeff > coefficients[worst].coeff) worst = i;
  const Scalar slack = total - coefficients[worst].coeff - coefficients[worst].coeff;
  v.certificate.li_slack = slack;
  v.certificate.delta = (Scalar(Rational(2)) - coefficients[worst].coeff - coefficients[worst].coeff) /
                        (Scalar(Rational(2)) - total);

  const int sign = fuzzy_sign(slack);
  if (sign > 0) {
    v.level = Level::KStable;
    v.certificate.rule = "every a_i < sum of the others";
    return v;
  }
  if (sign < 0) {
    v.level = Level::KUnstable;
    v.certificate.rule = "a point outweighs the rest";
    v.certificate.destabilizing_point = coefficients[worst].label;
    return v;
  }
  // boundary of the stable region: semistable, polystable only in the
  // two-point symmetric case (which carries its own torus action)
  if (coefficients.size() == 2 && fuzzy_equal(coefficients[0].coeff, coefficients[1].coeff)) {
    v.level = Level::KPolystable;
    v.certificate.rule = "two equal points";
    return v;
  }
  v.level = Level::KSemistableNotPolystable;
  v.certificate.rule = "slack zero at '" + coefficients[worst].label + "'";
  v.certificate.destabilizing_point = coefficients[worst].label;
  return v;
}

Verdict li_p1(const BoundaryDivisor& boundary) {
  std::vector<WeightedCoeff> coeffs;
  for (const auto& p : boundary.points) {
    if (p.coeff.sign() < 0 || p.coeff >= Rational(1))
      throw Error(ErrorCode::NotLogFano, "boundary coefficient at '" + p.label + "' outside [0,1)");
    coeffs.push_back({p.label, Scalar(p.coeff)});
  }
  return li_classify(std::move(coeffs));
}

namespace {

Verdict verdict_proj_line(const RefinedSeries& s, const LambdaFixed& lf) {
  if (fuzzy_sign(lf.lambda) <= 0)
    throw Error(ErrorCode::NotLogFano, "lambda <= 0: the reduced model is not log Fano");

  // boundary of the model: Delta_r plus the fixed part masses
  std::vector<WeightedCoeff> combined;
  for (const auto& p : s.target.boundary.points) combined.push_back({p.label, Scalar(p.coeff)});
  for (size_t i = 0; i < lf.mus.size(); ++i) {
    bool merged = false;
    for (auto& c : combined)
      if (c.label == lf.mus[i].label) {
        c.coeff += lf.mus[i].mu;
        merged = true;
      }
    if (!merged) combined.push_back({lf.mus[i].label, lf.mus[i].mu});
  }
  for (const auto& c : combined)
    if (fuzzy_sign(c.coeff - Scalar(Rational(1))) >= 0)
      throw Error(ErrorCode::NotLogFano, "combined coefficient at '" + c.label + "' is >= 1");

  Verdict model = li_classify(std::move(combined));
  Verdict v;
  // the weighted statement only distinguishes polystable / semistable /
  // unstable; stability of the model lifts to polystability
  v.level = model.level == Level::KStable ? Level::KPolystable : model.level;
  v.certificate = model.certificate;
  v.certificate.model_level = model.level;
  v.certificate.lambda = lf.lambda;
  v.certificate.mus = lf.mus;
  v.certificate.rule = "line model: " + v.certificate.rule;
  return v;
}

Verdict verdict_conic(const LambdaFixed& lf) {
  if (lf.mus.size() != 1)
    throw Error(ErrorCode::PreconditionFailed, "conic bridge expects exactly one fixed part");
  const Scalar mu = lf.mus.front().mu;
  if (fuzzy_sign(mu) <= 0)
    throw Error(ErrorCode::MuOutOfRange, "conic mass mu = " + mu.str() + " is not positive");

  Verdict v;
  v.certificate.lambda = lf.lambda;
  v.certificate.mus = lf.mus;
  v.certificate.mu = mu;
  v.certificate.mu_bound = "3/4";
  const int cmp = fuzzy_sign(mu - Scalar(Rational(3, 4)));
  if (cmp < 0) {
    v.level = Level::KPolystable;
    v.certificate.rule = "conic mass below 3/4";
  } else if (cmp == 0) {
    v.level = Level::KSemistableNotPolystable;
    v.certificate.rule = "conic mass equal to 3/4";
  } else {
    v.level = Level::KUnstable;
    v.certificate.rule = "conic mass above 3/4";
  }
  return v;
}

Verdict verdict_git_bridge(const RefinedSeries& s, const LambdaFixed& lf) {
  if (lf.mus.size() != 1)
    throw Error(ErrorCode::PreconditionFailed, "GIT bridge expects exactly one fixed part");
  const Scalar mu = lf.mus.front().mu;
  if (fuzzy_sign(mu) <= 0 || fuzzy_sign(mu - Scalar(Rational(1))) >= 0)
    throw Error(ErrorCode::MuOutOfRange, "mu = " + mu.str() + " outside (0, 1)");
  if (!s.target.git.has_value())
    throw Error(ErrorCode::PreconditionFailed, "GIT class of the fixed curve is not declared");

  Verdict v;
  v.certificate.lambda = lf.lambda;
  v.certificate.mus = lf.mus;
  v.certificate.mu = mu;
  v.certificate.mu_bound = "(0, 1)";
  v.certificate.git_used = s.target.git;
  switch (*s.target.git) {
    case GitClass::Stable:
    case GitClass::Polystable:
      v.level = Level::KPolystable;
      v.certificate.rule = "fixed curve GIT-(poly)stable, mu in (0, 1)";
      break;
    case GitClass::StrictlySemistable:
      v.level = Level::KSemistableNotPolystable;
      v.certificate.rule = "fixed curve strictly GIT-semistable";
      break;
    case GitClass::Unstable:
      v.level = Level::KUnstable;
      v.certificate.rule = "fixed curve GIT-unstable";
      break;
  }
  return v;
}

}  // namespace

Verdict weighted_verdict(const RefinedSeries& s, const WeightSpec& g) {
  require_valid(s);
  if (!is_weight(s, g, 1e-6))
    throw Error(ErrorCode::NotAWeight,
                "the weighted Futaki invariant does not vanish for this weight");
  const LambdaFixed lf = lambda_fixed(s, g);

  switch (s.target.kind) {
    case TargetKind::ProjLine:
      return verdict_proj_line(s, lf);
    case TargetKind::ProjPlane:
      if (s.target.curve == CurveKind::Conic) return verdict_conic(lf);
      return verdict_git_bridge(s, lf);
    case TargetKind::QuadricSurface:
      return verdict_git_bridge(s, lf);
  }
  throw Error(ErrorCode::PreconditionFailed, "unhandled target model");
}

Verdict complexity_one_three_points(const RefinedSeries& s, const WeightSpec& g) {
  if (s.target.kind != TargetKind::ProjLine)
    throw Error(ErrorCode::PreconditionFailed, "three-point case requires a proj-line target");
  if (s.target.boundary.points.size() != 3)
    throw Error(ErrorCode::PreconditionFailed, "boundary must consist of exactly three points");
  for (const auto& p : s.target.boundary.points) {
    // coefficients of the form 1 - 1/m with integral m >= 2
    const Rational remainder = Rational(1) - p.coeff;
    if (remainder.sign() <= 0 || remainder.numerator() != 1 || remainder.denominator() < 2)
      throw Error(ErrorCode::PreconditionFailed,
                  "coefficient at '" + p.label + "' is not of the form 1 - 1/m");
  }
  const LambdaFixed lf = lambda_fixed(s, g);
  if (fuzzy_sign(lf.lambda) <= 0)
    throw Error(ErrorCode::PreconditionFailed, "lambda <= 0");

  // the theorem promises K-polystability; re-derive and cross-check
  Verdict derived = weighted_verdict(s, g);
  if (derived.level != Level::KPolystable)
    throw Error(ErrorCode::InternalInconsistency,
                "three-point theorem predicts K-polystable but the computation returned " +
                    to_string(derived.level));
  derived.certificate.rule = "three-point boundary (re-derived: " + derived.certificate.rule + ")";
  return derived;
}

}  // namespace kstab
