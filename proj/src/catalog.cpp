#include "kstab/catalog.hpp"

#include <algorithm>

namespace kstab {

namespace {

const Rational kHalf(1, 2);

PiecewisePoly pw(std::vector<Rational> bps, std::vector<Poly> pieces) {
  return PiecewisePoly(std::move(bps), std::move(pieces));
}

// Blowup of P^3 along a plane cubic (and optionally a point): slices of
// O(3) through the strict transform of the plane, cut at alpha_0.
RefinedSeries cubic_blowup_series(const std::string& name, const Rational& alpha0) {
  TargetModel target;
  target.kind = TargetKind::ProjPlane;
  target.base_degree = Rational(1);
  target.curve = CurveKind::PlaneCubic;
  target.git = GitClass::Stable;

  PiecewisePoly f = pw({Rational(-1), Rational(0), alpha0},
                       {Poly{Rational(3), Rational(2)}, Poly{Rational(3), Rational(-1)}});
  PiecewisePoly k = pw({Rational(-1), Rational(0), alpha0},
                       {Poly{}, Poly{Rational(0), Rational(1)}});
  auto s = RefinedSeries::make(name, Interval(Rational(-1), alpha0), std::move(f),
                               {{"C", std::move(k), Rational(3)}}, std::move(target));
  s.normalization_shifts = {Rational(1)};
  return s;
}

RefinedSeries mm2_23a0() {
  TargetModel target;
  target.kind = TargetKind::QuadricSurface;
  target.base_degree = Rational(2);
  target.curve = CurveKind::Biconic;
  target.git = GitClass::Stable;

  PiecewisePoly f = pw({Rational(-1), Rational(0), Rational(2)},
                       {Poly{Rational(2), Rational(1)}, Poly{Rational(2), Rational(-1)}});
  PiecewisePoly k = pw({Rational(-1), Rational(0), Rational(2)},
                       {Poly{}, Poly{Rational(0), Rational(1)}});
  auto s = RefinedSeries::make("MM2.23a0", Interval(Rational(-1), Rational(2)), std::move(f),
                               {{"C", std::move(k), Rational(4)}}, std::move(target));
  s.normalization_shifts = {Rational(1)};
  return s;
}

RefinedSeries mm2_23b() {
  TargetModel target;
  target.kind = TargetKind::ProjPlane;
  target.base_degree = Rational(1);
  target.curve = CurveKind::Conic;

  PiecewisePoly f = pw({Rational(-3), Rational(-2), Rational(1), Rational(3)},
                       {Poly{Rational(3), Rational(1)},
                        Poly{Rational(5, 3), Rational(1, 3)},
                        Poly{Rational(3), Rational(-1)}});
  PiecewisePoly k = pw({Rational(-3), Rational(-2), Rational(1), Rational(3)},
                       {Poly{},
                        Poly{Rational(2, 3), Rational(1, 3)},
                        Poly{Rational(0), Rational(1)}});
  auto s = RefinedSeries::make("MM2.23b", Interval(Rational(-3), Rational(3)), std::move(f),
                               {{"C2", std::move(k), Rational(2)}}, std::move(target));
  s.normalization_shifts = {Rational(3)};
  return s;
}

ZariskiVolProfile p2_wt21_profile() {
  ZariskiVolProfile z;
  z.name = "p2-wt21-profile";
  z.vol_of_L = Rational(1);
  // vol(O(1) - tE) for the (2,1)-weighted blowup of P^2: ample range up to
  // t = 1, then the Zariski decomposition (2-t)(O(1)-E) + (t-1) l~.
  z.profile = pw({Rational(0), Rational(1), Rational(2)},
                 {Poly{Rational(1), Rational(0), Rational(-1, 2)},
                  Poly{Rational(2), Rational(-2), Rational(1, 2)}});
  z.tau = Rational(2);
  return z;
}

}  // namespace

RefinedSeries conic_p2(const Rational& c) {
  TargetModel target;
  target.kind = TargetKind::ProjLine;
  target.base_degree = Rational(1);
  target.boundary.points = {{"p0", kHalf}, {"p2", c}};

  PiecewisePoly f = pw({Rational(0), Rational(1), Rational(2)},
                       {Poly{Rational(0), kHalf}, Poly{Rational(1), Rational(-1, 2)}});
  PiecewisePoly k = pw({Rational(0), Rational(1), Rational(2)},
                       {Poly{}, Poly{Rational(-1), Rational(1)}});
  auto s = RefinedSeries::make("conic-P2", Interval(Rational(0), Rational(2)), std::move(f),
                               {{"p1", std::move(k), Rational(1)}}, std::move(target));
  s.normalization_shifts = {Rational(1)};
  s.s_scale = Rational(3) - Rational(2) * c;
  return s;
}

std::vector<std::string> builtin_names() {
  return {"conic-P2", "MM2.28", "MM3.14", "MM2.23a0", "MM2.23b", "p2-wt21-profile"};
}

bool is_builtin(const std::string& name) {
  const auto names = builtin_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

BuiltinEntry builtin(const std::string& name, const Rational& conic_c) {
  if (name == "conic-P2") return conic_p2(conic_c);
  if (name == "MM2.28") return cubic_blowup_series("MM2.28", Rational(3));
  if (name == "MM3.14") return cubic_blowup_series("MM3.14", Rational(1));
  if (name == "MM2.23a0") return mm2_23a0();
  if (name == "MM2.23b") return mm2_23b();
  if (name == "p2-wt21-profile") return p2_wt21_profile();
  throw Error(ErrorCode::UnknownName, "no builtin named '" + name + "'");
}

RefinedSeries builtin_series(const std::string& name, const Rational& conic_c) {
  auto entry = builtin(name, conic_c);
  if (auto* s = std::get_if<RefinedSeries>(&entry)) return std::move(*s);
  throw Error(ErrorCode::UnknownName, "'" + name + "' is a volume profile, not a series");
}

ZariskiVolProfile builtin_profile(const std::string& name) {
  auto entry = builtin(name);
  if (auto* z = std::get_if<ZariskiVolProfile>(&entry)) return std::move(*z);
  throw Error(ErrorCode::UnknownName, "'" + name + "' is a series, not a volume profile");
}

}  // namespace kstab
