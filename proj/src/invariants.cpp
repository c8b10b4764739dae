#include "kstab/invariants.hpp"

#include <cmath>

#include "kstab/quad.hpp"

namespace kstab {

Scalar weighted_volume(const RefinedSeries& s, const WeightSpec& g) {
  return weighted_moment(s, g, 0);
}

DHDensity dh(const RefinedSeries& s, const WeightSpec& g) {
  require_valid(s);
  const Scalar volume = weighted_moment(s, g, 0);
  if (volume.sign() <= 0)
    throw Error(ErrorCode::DegenerateVolume, "weighted volume is not positive");
  const double v = volume.value();

  const PiecewisePoly vol = s.vol;  // copy shared by the closure
  auto density = [vol, g, v](double a) { return g(a) * vol.eval_double(a) / v; };

  // total and barycenter are recomputed by quadrature on the callable, so
  // that the normalization is checked through an independent route
  std::vector<double> splits = g.split_points();
  for (const Rational& b : vol.breakpoints()) splits.push_back(b.to_double());
  const double lo = s.moment.lo.to_double(), hi = s.moment.hi.to_double();
  DHDensity out;
  out.density = density;
  out.total = adaptive_simpson_split(density, lo, hi, splits, 1e-14);
  out.barycenter =
      adaptive_simpson_split([&](double a) { return a * density(a); }, lo, hi, splits, 1e-14);
  return out;
}

Rational s_from_zariski(const ZariskiVolProfile& z) {
  require_valid(z);
  return z.profile.integrate(Interval(Rational(0), z.tau)) / z.vol_of_L;
}

Scalar fl(const Rational& a_log_discrepancy, const Scalar& s_value) {
  return Scalar(a_log_discrepancy) - s_value;
}

LambdaFixed lambda_fixed(const RefinedSeries& s, const WeightSpec& g) {
  require_valid(s);
  const Scalar volume = weighted_moment(s, g, 0);
  if (volume.sign() <= 0)
    throw Error(ErrorCode::DegenerateVolume, "weighted volume is not positive");

  const Scalar scale(s.s_scale);
  LambdaFixed out;
  out.lambda = scale * weighted_integral(pw_mul(s.mobile_f, s.vol), g, s.moment) / volume;
  for (const auto& fp : s.fixed_parts)
    out.mus.push_back({fp.label,
                       scale * weighted_integral(pw_mul(fp.k, s.vol), g, s.moment) / volume});
  return out;
}

Scalar s_point_p1(const RefinedSeries& s, const WeightSpec& g, const std::string& label) {
  if (s.target.kind != TargetKind::ProjLine)
    throw Error(ErrorCode::PreconditionFailed, "point S-values are defined on proj-line targets");
  require_valid(s);
  const Scalar volume = weighted_moment(s, g, 0);
  if (volume.sign() <= 0)
    throw Error(ErrorCode::DegenerateVolume, "weighted volume is not positive");

  // S of a complete degree-d series at any point of P^1 is d/2, so the
  // slice S-value is f/2 plus the fixed-part coefficient at the point
  Scalar value = weighted_integral(pw_mul(s.mobile_f, s.vol), g, s.moment) / volume /
                 Scalar(Rational(2));
  if (label == "generic") return value;
  if (const FixedPart* fp = s.fixed_part(label))
    return value + weighted_integral(pw_mul(fp->k, s.vol), g, s.moment) / volume;
  if (s.target.boundary.has(label)) return value;  // boundary point off the fixed locus
  throw Error(ErrorCode::UnknownPoint, "'" + label + "' is not a boundary point, a fixed-part "
                                       "label, or \"generic\"");
}

DeltaReport delta_p1(const RefinedSeries& s, const WeightSpec& g) {
  if (s.target.kind != TargetKind::ProjLine)
    throw Error(ErrorCode::PreconditionFailed, "delta is computed on proj-line targets");

  // S is constant off the fixed-part support and A is constant off the
  // boundary, so the infimum over points of P^1 is attained on the union
  // of the two supports plus a generic point
  std::vector<std::string> candidates;
  for (const auto& p : s.target.boundary.points) candidates.push_back(p.label);
  for (const auto& fp : s.fixed_parts)
    if (!s.target.boundary.has(fp.label)) candidates.push_back(fp.label);
  candidates.push_back("generic");

  const Scalar scale(s.s_scale);
  DeltaReport report;
  for (const auto& label : candidates) {
    DeltaPoint row;
    row.label = label;
    row.a = Rational(1) - s.target.boundary.coeff_of(label);
    row.s = scale * s_point_p1(s, g, label);
    if (row.s.sign() <= 0)
      throw Error(ErrorCode::DegenerateVolume, "S-value at '" + label + "' is not positive");
    row.ratio = Scalar(row.a) / row.s;
    report.per_point.push_back(std::move(row));
  }

  size_t best = 0;
  for (size_t i = 1; i < report.per_point.size(); ++i)
    if (report.per_point[i].ratio < report.per_point[best].ratio) best = i;
  report.delta = report.per_point[best].ratio;
  report.argmin = report.per_point[best].label;
  return report;
}

Scalar lambda_identity_gap(const RefinedSeries& s, const LambdaFixed& lf) {
  Scalar fixed_total;
  for (size_t i = 0; i < lf.mus.size(); ++i)
    fixed_total += lf.mus[i].mu * Scalar(s.fixed_parts[i].degree);
  const Scalar rhs = Scalar(s.target.anticanonical_degree()) -
                     Scalar(s.target.boundary.total()) - fixed_total;
  return lf.lambda * Scalar(s.target.base_degree) - rhs;
}

Scalar lambda_identity_gap(const RefinedSeries& s, const WeightSpec& g) {
  return lambda_identity_gap(s, lambda_fixed(s, g));
}

}  // namespace kstab
