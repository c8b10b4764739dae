#include "kstab/series.hpp"

#include <set>

#include "kstab/polysign.hpp"

namespace kstab {

std::string to_string(TargetKind k) {
  switch (k) {
    case TargetKind::ProjLine: return "proj-line";
    case TargetKind::ProjPlane: return "proj-plane";
    case TargetKind::QuadricSurface: return "quadric";
  }
  return "?";
}

std::string to_string(CurveKind k) {
  switch (k) {
    case CurveKind::Conic: return "conic";
    case CurveKind::PlaneCubic: return "plane-cubic";
    case CurveKind::Biconic: return "biconic";
  }
  return "?";
}

std::string to_string(GitClass g) {
  switch (g) {
    case GitClass::Stable: return "stable";
    case GitClass::Polystable: return "polystable";
    case GitClass::StrictlySemistable: return "strictly-semistable";
    case GitClass::Unstable: return "unstable";
  }
  return "?";
}

TargetKind target_kind_from_string(const std::string& s) {
  if (s == "proj-line") return TargetKind::ProjLine;
  if (s == "proj-plane") return TargetKind::ProjPlane;
  if (s == "quadric") return TargetKind::QuadricSurface;
  throw Error(ErrorCode::ParseError, "unknown target '" + s + "'");
}

CurveKind curve_kind_from_string(const std::string& s) {
  if (s == "conic") return CurveKind::Conic;
  if (s == "plane-cubic") return CurveKind::PlaneCubic;
  if (s == "biconic") return CurveKind::Biconic;
  throw Error(ErrorCode::ParseError, "unknown curve kind '" + s + "'");
}

GitClass git_class_from_string(const std::string& s) {
  if (s == "stable") return GitClass::Stable;
  if (s == "polystable") return GitClass::Polystable;
  if (s == "strictly-semistable") return GitClass::StrictlySemistable;
  if (s == "unstable") return GitClass::Unstable;
  throw Error(ErrorCode::ParseError, "unknown GIT class '" + s + "'");
}

Rational BoundaryDivisor::total() const {
  Rational t(0);
  for (const auto& p : points) t += p.coeff;
  return t;
}

bool BoundaryDivisor::has(const std::string& label) const {
  for (const auto& p : points)
    if (p.label == label) return true;
  return false;
}

Rational BoundaryDivisor::coeff_of(const std::string& label) const {
  for (const auto& p : points)
    if (p.label == label) return p.coeff;
  return Rational(0);
}

Rational TargetModel::anticanonical_degree() const {
  switch (kind) {
    case TargetKind::ProjLine: return Rational(2);
    case TargetKind::ProjPlane: return Rational(3);
    case TargetKind::QuadricSurface: return Rational(4);
  }
  return Rational(0);
}

RefinedSeries RefinedSeries::make(std::string name, Interval moment, PiecewisePoly mobile_f,
                                  std::vector<FixedPart> fixed_parts, TargetModel target) {
  RefinedSeries s;
  s.name = std::move(name);
  s.moment = moment;
  s.vol = mobile_f.apply([&](const Poly& p) {
    return target.base_degree * p.pow(static_cast<unsigned>(target.dimension()));
  });
  s.mobile_f = std::move(mobile_f);
  s.fixed_parts = std::move(fixed_parts);
  s.target = std::move(target);
  return s;
}

const FixedPart* RefinedSeries::fixed_part(const std::string& label) const {
  for (const auto& fp : fixed_parts)
    if (fp.label == label) return &fp;
  return nullptr;
}

namespace {

struct Checker {
  ValidationReport report;

  void fail(const std::string& clause, const std::string& detail, bool sampled = false) {
    report.violations.push_back({clause, detail, sampled});
  }

  void check_sign(const PiecewisePoly& f, const std::string& clause, const std::string& what) {
    for (size_t i = 0; i < f.piece_count(); ++i) {
      const auto r = check_nonnegative(f.piece(i), f.breakpoints()[i], f.breakpoints()[i + 1]);
      if (r.outcome == SignOutcome::Violated)
        fail(clause, what + " is negative at " + r.witness.str());
      else if (r.outcome == SignOutcome::Sampled)
        report.notes.push_back(clause + ": piece " + std::to_string(i) + " of " + what +
                               " sampled, not proven (degree > 3)");
    }
  }
};

}  // namespace

ValidationReport validate(const RefinedSeries& s) {
  Checker c;

  if (!(s.vol.domain() == s.moment))
    c.fail("domains match moment", "vol is defined on " + s.vol.domain().lo.str() + ".." +
                                       s.vol.domain().hi.str());
  if (!(s.mobile_f.domain() == s.moment))
    c.fail("domains match moment", "mobile part is defined off the moment interval");
  for (const auto& fp : s.fixed_parts)
    if (!(fp.k.domain() == s.moment))
      c.fail("domains match moment", "fixed part '" + fp.label + "' is defined off the moment interval");
  if (!c.report.ok()) return c.report;  // later checks assume aligned domains

  // sign conditions
  c.check_sign(s.vol, "vol >= 0", "vol");
  c.check_sign(s.mobile_f, "f >= 0", "mobile part");
  for (const auto& fp : s.fixed_parts) c.check_sign(fp.k, "k >= 0", "fixed part '" + fp.label + "'");

  // vol > 0 on the interior of the moment interval
  bool vol_nonneg = true;
  for (const auto& v : c.report.violations)
    if (v.clause == "vol >= 0") vol_nonneg = false;
  if (vol_nonneg) {
    for (size_t i = 0; i < s.vol.piece_count(); ++i) {
      const Rational lo = s.vol.breakpoints()[i], hi = s.vol.breakpoints()[i + 1];
      const auto r = check_positive_interior(s.vol.piece(i), lo, hi);
      if (r.outcome == SignOutcome::Violated)
        c.fail("vol > 0 on interior", "vol vanishes near " + r.witness.str());
      else if (r.outcome == SignOutcome::Sampled)
        c.report.notes.push_back("vol > 0 on interior: piece " + std::to_string(i) +
                                 " sampled, not proven (degree > 3)");
      // interior breakpoint values, from both sides
      if (i > 0 && s.vol.piece(i)(lo).is_zero())
        c.fail("vol > 0 on interior", "vol vanishes at breakpoint " + lo.str());
      if (i > 0 && s.vol.piece(i - 1)(lo).is_zero())
        c.fail("vol > 0 on interior", "vol vanishes at breakpoint " + lo.str());
    }
  }

  // mobile part is piecewise linear
  for (size_t i = 0; i < s.mobile_f.piece_count(); ++i)
    if (s.mobile_f.piece(i).degree() > 1)
      c.fail("f piecewise linear", "piece " + std::to_string(i) + " has degree " +
                                       std::to_string(s.mobile_f.piece(i).degree()));

  // vol = vol(L) * f^(n-r), exact identity of piecewise polynomials
  {
    const PiecewisePoly expected = s.mobile_f.apply([&](const Poly& p) {
      return s.target.base_degree * p.pow(static_cast<unsigned>(s.target.dimension()));
    });
    const PiecewisePoly diff = pw_add(s.vol, expected.scaled(Rational(-1)));
    bool zero = true;
    for (size_t i = 0; i < diff.piece_count(); ++i)
      if (!diff.piece(i).is_zero()) zero = false;
    if (!zero) c.fail("vol = vol(L)*f^(n-r)", "stored vol differs from vol(L)*f^dim");
  }

  if (s.target.base_degree.sign() <= 0)
    c.fail("vol(L) > 0", "base degree " + s.target.base_degree.str());
  if (s.s_scale.sign() <= 0) c.fail("s_scale > 0", "scale " + s.s_scale.str());
  for (const auto& fp : s.fixed_parts)
    if (fp.degree.sign() <= 0)
      c.fail("fixed-part degree > 0", "'" + fp.label + "' has degree " + fp.degree.str());

  // boundary checks (proj-line only)
  if (s.target.kind == TargetKind::ProjLine) {
    std::set<std::string> seen;
    for (const auto& p : s.target.boundary.points) {
      if (p.coeff.sign() < 0 || p.coeff >= Rational(1))
        c.fail("boundary coeff in [0,1)", "'" + p.label + "' has coefficient " + p.coeff.str());
      if (!seen.insert(p.label).second)
        c.fail("boundary labels distinct", "label '" + p.label + "' repeats");
    }
    if (s.target.boundary.total() >= Rational(2))
      c.fail("sum of boundary coeffs < 2", "total " + s.target.boundary.total().str());
    if (s.target.curve.has_value())
      c.fail("curve only on surface targets", "proj-line target carries a curve kind");
  } else {
    if (!s.target.boundary.points.empty())
      c.fail("boundary only on proj-line", "surface target carries boundary points");
    if (!s.target.curve.has_value())
      c.fail("curve kind required on surface targets", to_string(s.target.kind));
  }

  // git class present exactly for cubic / biconic kinds
  if (s.target.curve.has_value()) {
    const bool needs_git = *s.target.curve != CurveKind::Conic;
    if (needs_git && !s.target.git.has_value())
      c.fail("git class present exactly for cubic/biconic", "missing GIT class");
    if (!needs_git && s.target.git.has_value())
      c.fail("git class present exactly for cubic/biconic", "conic carries a GIT class");
  }

  return c.report;
}

ValidationReport validate(const ZariskiVolProfile& z) {
  Checker c;
  if (z.vol_of_L.sign() <= 0) c.fail("vol(L) > 0", "vol(L) = " + z.vol_of_L.str());
  if (!(z.profile.domain() == Interval(Rational(0), z.tau)))
    c.fail("profile domain is [0, tau]", "domain ends at " + z.profile.domain().hi.str());
  if (!c.report.ok()) return c.report;

  if (z.profile(Rational(0)) != z.vol_of_L)
    c.fail("profile(0) = vol(L)", "profile(0) = " + z.profile(Rational(0)).str());
  c.check_sign(z.profile, "profile >= 0", "profile");

  // non-increasing: the derivative of every piece is <= 0 on the piece,
  // which check_nonnegative certifies applied to -p'
  for (size_t i = 0; i < z.profile.piece_count(); ++i) {
    const auto r = check_nonnegative(-z.profile.piece(i).derivative(),
                                     z.profile.breakpoints()[i], z.profile.breakpoints()[i + 1]);
    if (r.outcome == SignOutcome::Violated)
      c.fail("profile non-increasing", "profile increases near " + r.witness.str());
    else if (r.outcome == SignOutcome::Sampled)
      c.report.notes.push_back("profile non-increasing: piece " + std::to_string(i) +
                               " sampled, not proven (degree > 3)");
  }
  return c.report;
}

namespace {
template <typename T>
void require_valid_impl(const T& value, const std::string& what) {
  const auto report = validate(value);
  if (!report.ok())
    throw Error(ErrorCode::ValidationError,
                what + " violates \"" + report.violations.front().clause + "\" (" +
                    report.violations.front().detail + ")");
}
}  // namespace

void require_valid(const RefinedSeries& s) { require_valid_impl(s, "series '" + s.name + "'"); }
void require_valid(const ZariskiVolProfile& z) { require_valid_impl(z, "profile '" + z.name + "'"); }

}  // namespace kstab
