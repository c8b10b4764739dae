#include "kstab/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>

#include "kstab/catalog.hpp"
#include "kstab/invariants.hpp"
#include "kstab/quad.hpp"
#include "kstab/verdict.hpp"

namespace kstab {

namespace {

// ---------------------------------------------------------------------------
// double-native view of piecewise data, so the quadrature cross-checks never
// touch the exact antiderivative machinery they are checking
struct DoublePieces {
  std::vector<double> bps;
  std::vector<std::vector<double>> coeffs;

  explicit DoublePieces(const PiecewisePoly& f) {
    for (const Rational& b : f.breakpoints()) bps.push_back(b.to_double());
    for (size_t i = 0; i < f.piece_count(); ++i) {
      std::vector<double> c;
      const Poly& p = f.piece(i);
      for (int j = 0; j <= std::max(p.degree(), 0); ++j)
        c.push_back(p.coeff(static_cast<size_t>(j)).to_double());
      coeffs.push_back(std::move(c));
    }
  }

  double operator()(double x) const {
    size_t i = 0;
    while (i + 1 < coeffs.size() && bps[i + 1] <= x) ++i;
    double acc = 0.0;
    for (auto it = coeffs[i].rbegin(); it != coeffs[i].rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  double quad(const std::function<double(double)>& factor, double rel_tol = 1e-12) const {
    auto integrand = [&](double x) { return (*this)(x)*factor(x); };
    return adaptive_simpson_split(integrand, bps.front(), bps.back(), bps, rel_tol);
  }
};

struct Harness {
  std::string filter;
  std::mt19937_64 rng;
  std::vector<CriterionResult> results;

  bool selected(const std::string& id) const {
    return filter.empty() || id.find(filter) != std::string::npos;
  }

  void run(const std::string& id, const std::function<void(std::ostringstream&)>& body) {
    if (!selected(id)) return;
    CriterionResult r{id, true, ""};
    std::ostringstream detail;
    try {
      body(detail);
      r.detail = detail.str();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  }

  [[noreturn]] static void reject(const std::string& message) {
    throw std::runtime_error(message);
  }

  static void require(bool ok, const std::string& message) {
    if (!ok) reject(message);
  }

  Rational random_rational(long long max_num, long long max_den) {
    std::uniform_int_distribution<long long> num(-max_num, max_num);
    std::uniform_int_distribution<long long> den(1, max_den);
    return Rational(num(rng), den(rng));
  }

  double random_double(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  }

  int random_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
};

bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

bool rel_near(double value, double reference, double tol) {
  return std::fabs(value - reference) <= tol * std::max(std::fabs(reference), 1e-30);
}

// positive random piecewise polynomial on a positive interval, so that
// every checked integral is bounded away from zero and relative error is
// meaningful
PiecewisePoly random_positive_pieces(Harness& h, int max_degree) {
  const int pieces = h.random_int(1, 5);
  std::vector<Rational> bps = {Rational(1, 2)};
  for (int i = 0; i < pieces; ++i)
    bps.push_back(bps.back() + Rational(h.random_int(1, 8), h.random_int(1, 4)));
  std::vector<Poly> ps;
  const Rational reach = bps.back();
  for (int i = 0; i < pieces; ++i) {
    const int deg = h.random_int(0, max_degree);
    std::vector<Rational> c(static_cast<size_t>(deg) + 1);
    Rational bound(1);
    for (int j = 0; j <= deg; ++j) {
      c[static_cast<size_t>(j)] = h.random_rational(100, 100);
      bound += abs(c[static_cast<size_t>(j)]) * pow(reach, static_cast<unsigned>(j));
    }
    c[0] += bound;  // lower bound 1 on the whole interval
    ps.push_back(Poly(std::move(c)));
  }
  return PiecewisePoly(std::move(bps), std::move(ps));
}

// valid random series on a sign-mixed moment interval: tent-shaped mobile
// part, one optional ramp fixed part
RefinedSeries random_series(Harness& h) {
  const Rational lo(-h.random_int(1, 3)), hi(h.random_int(1, 3));
  const Rational mid(0);
  const Rational e0(h.random_int(0, 2)), e1(h.random_int(0, 2));
  const Rational peak(h.random_int(1, 4));

  auto line_through = [](const Rational& x0, const Rational& y0, const Rational& x1,
                         const Rational& y1) {
    const Rational slope = (y1 - y0) / (x1 - x0);
    return Poly{y0 - slope * x0, slope};
  };
  PiecewisePoly f({lo, mid, hi},
                  {line_through(lo, e0, mid, peak), line_through(mid, peak, hi, e1)});

  std::vector<FixedPart> fixed;
  if (h.random_int(0, 1)) {
    const Rational slope(h.random_int(1, 3), 2);
    PiecewisePoly k({lo, mid, hi}, {Poly{}, Poly{Rational(0), slope}});
    fixed.push_back({"F", std::move(k), Rational(h.random_int(1, 3))});
  }

  TargetModel target;
  if (h.random_int(0, 1)) {
    target.kind = TargetKind::ProjLine;
    target.base_degree = Rational(1);
  } else {
    target.kind = TargetKind::ProjPlane;
    target.base_degree = Rational(1);
    target.curve = CurveKind::Conic;
  }
  return RefinedSeries::make("random", Interval(lo, hi), std::move(f), std::move(fixed),
                             std::move(target));
}

WeightSpec random_weight(Harness& h, const RefinedSeries& s) {
  switch (h.random_int(0, 3)) {
    case 0:
      return WeightSpec::constant(Rational(h.random_int(1, 5), h.random_int(1, 3)));
    case 1:
      return WeightSpec::exponential(h.random_double(-1.0, 1.0));
    case 2: {
      // quadratic factor kept positive by a generous constant term
      const Rational c2(h.random_int(0, 2)), c1(h.random_int(-2, 2));
      const Rational reach = max(abs(s.moment.lo), abs(s.moment.hi));
      const Rational c0 = Rational(1) + abs(c1) * reach + c2 * reach * reach;
      return WeightSpec::poly_exp(Poly{c0, c1, c2}, h.random_double(-1.0, 1.0));
    }
    default: {
      const double lo = s.moment.lo.to_double(), hi = s.moment.hi.to_double();
      const int n = h.random_int(8, 14);
      std::vector<std::pair<double, double>> samples;
      for (int i = 0; i < n; ++i) {
        const double x = lo + (hi - lo) * i / (n - 1);
        samples.emplace_back(x, h.random_double(0.2, 2.0));
      }
      return WeightSpec::tabulated(std::move(samples));
    }
  }
}

// λ-identity fixture: symmetric tent with a fixed part chosen so that
// f + k + alpha is constant, making the degree identity exact under any
// weight with vanishing first moment
RefinedSeries symmetric_fixture() {
  PiecewisePoly f({Rational(-1), Rational(0), Rational(1)},
                  {Poly{Rational(1), Rational(1)}, Poly{Rational(1), Rational(-1)}});
  PiecewisePoly k({Rational(-1), Rational(0), Rational(1)},
                  {Poly{Rational(1), Rational(-2)}, Poly{Rational(1)}});
  TargetModel target;
  target.kind = TargetKind::ProjLine;
  target.base_degree = Rational(1);
  return RefinedSeries::make("symmetric-fixture", Interval(Rational(-1), Rational(1)),
                             std::move(f), {{"q", std::move(k), Rational(1)}}, std::move(target));
}

// -------------------------------------------------------------------------
// criteria

void conic_s_zariski(std::ostringstream& detail) {
  ZariskiVolProfile profile = builtin_profile("p2-wt21-profile");
  // self-test hook: a perturbed datum must make this criterion fail
  if (std::getenv("KSTAB_REPRODUCE_PERTURB") != nullptr)
    profile.profile = pw_add(profile.profile,
                             PiecewisePoly::constant(Rational(1, 100), profile.profile.domain()));
  const Rational s = s_from_zariski(profile);
  Harness::require(s == Rational(1), "S(O(1); E) = " + s.str() + ", expected 1");
  detail << "S(O(1); E) = 1 exactly";
}

void conic_point_s(std::ostringstream& detail) {
  const RefinedSeries s = conic_p2(Rational(1, 2));
  const WeightSpec g = WeightSpec::constant(Rational(1));
  const Scalar generic = s_point_p1(s, g, "generic");
  const Scalar at_p1 = s_point_p1(s, g, "p1");
  Harness::require(generic.is_exact() && generic.exact() == Rational(1, 6),
                   "S(generic) = " + generic.str());
  Harness::require(at_p1.is_exact() && at_p1.exact() == Rational(1, 3), "S(p1) = " + at_p1.str());
  detail << "S(generic) = 1/6, S(p1) = 1/3, exact";
}

void conic_delta(std::ostringstream& detail) {
  const WeightSpec g = WeightSpec::constant(Rational(1));
  const std::vector<Rational> cs = {Rational(1, 10), Rational(1, 4), Rational(1, 2),
                                    Rational(2, 3), Rational(3, 4)};
  for (const Rational& c : cs) {
    const DeltaReport report = delta_p1(conic_p2(c), g);
    const Rational denom = Rational(3) - Rational(2) * c;
    const Rational expected = min(Rational(3) / denom, (Rational(6) - Rational(6) * c) / denom);
    Harness::require(report.delta.is_exact() && report.delta.exact() == expected,
                     "delta(c = " + c.str() + ") = " + report.delta.str() + ", expected " +
                         expected.str());
    const bool above_one = report.delta.exact() > Rational(1);
    Harness::require(above_one == (c < Rational(3, 4)),
                     "delta > 1 must hold exactly for c < 3/4 (c = " + c.str() + ")");
    if (c == Rational(3, 4)) {
      Harness::require(report.delta.exact() == Rational(1), "delta(3/4) must be 1");
      Harness::require(report.argmin == "p2", "argmin at c = 3/4 is " + report.argmin);
    }
  }
  detail << "delta = min{3/(3-2c), (6-6c)/(3-2c)} exactly at 5 values of c";
}

void soliton_2_23b(std::ostringstream& detail) {
  const RefinedSeries s = builtin_series("MM2.23b");
  const SolitonSolve sol = solve_soliton(s, 1e-12);
  const WeightSpec g = WeightSpec::exponential(sol.eta0);
  const double scale = abs_alpha_moment(s, g).value();
  Harness::require(std::fabs(sol.residual) < 1e-12 * scale, "soliton residual too large");

  // closed-form route
  const LambdaFixed lf = lambda_fixed(s, g);
  const double mu_closed = lf.mus.front().mu.value();
  // independent quadrature route on double-native data
  const DoublePieces vol(s.vol), k(s.fixed_parts.front().k);
  auto weight = [&](double a) { return std::exp(-sol.eta0 * a); };
  const double den = vol.quad(weight);
  const double num = vol.quad([&](double a) { return weight(a) * k(a); });
  const double mu_quad = num / den;

  Harness::require(rel_near(mu_closed, mu_quad, 1e-9),
                   "mu routes disagree: " + std::to_string(mu_closed) + " vs " +
                       std::to_string(mu_quad));
  Harness::require(mu_closed < 0.739237 && mu_closed < 0.75, "mu bound violated");
  const Verdict v = weighted_verdict(s, g);
  Harness::require(v.level == Level::KPolystable, "verdict is " + to_string(v.level));
  detail << "eta0 = " << sol.eta0 << ", mu = " << mu_closed << " < 0.739237 < 3/4, K-polystable";
}

void moments_2_28(std::ostringstream& detail) {
  const RefinedSeries s = builtin_series("MM2.28");
  const WeightSpec g = WeightSpec::constant(Rational(1));
  const Scalar volume = weighted_volume(s, g);
  const Scalar futaki = futaki_g(s, g);
  Harness::require(volume.is_exact() && volume.exact() == Rational(40, 3),
                   "V = " + volume.str());
  Harness::require(futaki.is_exact() && futaki.exact() == Rational(-63, 160),
                   "Fut = " + futaki.str());
  bool refused = false;
  try {
    weighted_verdict(s, g);
  } catch (const Error& e) {
    refused = e.code() == ErrorCode::NotAWeight;
  }
  Harness::require(refused, "constant weight must be refused with NotAWeight");
  detail << "V = 40/3 and Fut = -63/160 exactly; constant weight refused";
}

void sweep_2_28_3_14(std::ostringstream& detail) {
  const std::vector<Rational> cs = {Rational(0), Rational(1, 2), Rational(1), Rational(2),
                                    Rational(4)};
  int members = 0;
  for (const char* name : {"MM2.28", "MM3.14"}) {
    const RefinedSeries stable = builtin_series(name);
    RefinedSeries unstable = stable;
    unstable.target.git = GitClass::Unstable;
    for (const Rational& c : cs) {
      const WeightSpec g = weight_family(stable, c);
      Harness::require(is_weight(stable, g, 1e-9), "family member is not a weight");
      const LambdaFixed lf = lambda_fixed(stable, g);
      const double mu = lf.mus.front().mu.value();
      Harness::require(mu > 0.0 && mu < 1.0, "mu outside (0,1)");
      Harness::require(weighted_verdict(stable, g).level == Level::KPolystable,
                       "GIT-stable cubic must give K-polystable");
      Harness::require(weighted_verdict(unstable, g).level == Level::KUnstable,
                       "GIT-unstable cubic must give K-unstable");
      ++members;
    }
  }
  detail << members << " family members: weight check, mu in (0,1), verdicts by GIT class";
}

void lambda_identity(std::ostringstream& detail) {
  const std::vector<Rational> cs = {Rational(0), Rational(1, 2), Rational(1), Rational(2),
                                    Rational(4)};
  int checked = 0;
  for (const char* name : {"conic-P2", "MM2.28", "MM3.14", "MM2.23a0", "MM2.23b"}) {
    const RefinedSeries s = builtin_series(name);
    for (const Rational& c : cs) {
      WeightSpec g = WeightSpec::constant(Rational(1));
      try {
        g = weight_family(s, c);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::NoRoot) continue;  // no exponential weight exists
        throw;
      }
      if (!is_weight(s, g, 1e-9)) continue;
      const double gap = lambda_identity_gap(s, g).value();
      Harness::require(std::fabs(gap) < 1e-9,
                       std::string(name) + ": identity gap " + std::to_string(gap));
      ++checked;
    }
  }
  // exact zero on the symmetric fixture under a constant weight
  const RefinedSeries sym = symmetric_fixture();
  const Scalar gap = lambda_identity_gap(sym, WeightSpec::constant(Rational(1)));
  Harness::require(gap.is_exact() && gap.exact() == Rational(0),
                   "symmetric fixture gap = " + gap.str());
  Harness::require(checked >= 8, "too few weight/series pairs were checkable");
  detail << "lambda*degL = deg(-K) - degDelta - sum mu_j*degF_j on " << checked
         << " pairs; exact 0 on the symmetric fixture";
}

void dh_normalization(Harness& h, std::ostringstream& detail) {
  for (int trial = 0; trial < 20; ++trial) {
    const RefinedSeries s = random_series(h);
    const WeightSpec g = random_weight(h, s);
    const DHDensity density = dh(s, g);
    const double futaki = futaki_g(s, g).value();
    Harness::require(near(density.total, 1.0, 1e-12),
                     "DH total = " + std::to_string(density.total));
    Harness::require(near(density.barycenter, -futaki,
                          1e-12 * std::max(1.0, std::fabs(futaki))),
                     "barycenter " + std::to_string(density.barycenter) + " vs -Fut " +
                         std::to_string(-futaki));
  }
  detail << "20 random (series, weight) pairs: total = 1 and barycenter = -Fut_g to 1e-12";
}

void kernel_oracle(Harness& h, std::ostringstream& detail) {
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const PiecewisePoly f = random_positive_pieces(h, 6);
    const DoublePieces fd(f);
    const Interval I = f.domain();

    for (unsigned k = 0; k <= 2; ++k) {
      const double exact = f.moment(k, I).to_double();
      const double quad = fd.quad([k](double x) { return std::pow(x, k); }, 1e-13);
      Harness::require(rel_near(exact, quad, 1e-10), "moment mismatch at k = " + std::to_string(k));
      worst = std::max(worst, std::fabs(exact - quad) / std::max(std::fabs(quad), 1e-30));
    }

    const double eta = h.random_double(-3.0, 3.0);
    const double exact = f.exp_moment(eta, I);
    const double quad = fd.quad([eta](double x) { return std::exp(-eta * x); }, 1e-13);
    Harness::require(rel_near(exact, quad, 1e-10), "exp moment mismatch at eta = " +
                                                        std::to_string(eta));
    worst = std::max(worst, std::fabs(exact - quad) / std::max(std::fabs(quad), 1e-30));
  }
  detail << "100 random piecewise polynomials; worst relative gap " << worst;
}

void li_criterion(Harness& h, std::ostringstream& detail) {
  // fixed examples
  Harness::require(li_p1({{{"a", Rational(1, 2)}, {"b", Rational(1, 2)}, {"c", Rational(1, 2)}}})
                           .level == Level::KStable,
                   "three half points must be K-stable");
  Harness::require(li_p1({{{"a", Rational(1, 3)}}}).level == Level::KUnstable,
                   "a single point must be K-unstable");
  Harness::require(li_p1({}).level == Level::KPolystable, "empty boundary must be K-polystable");

  for (int trial = 0; trial < 200; ++trial) {
    BoundaryDivisor boundary;
    const int n = h.random_int(0, 5);
    for (int i = 0; i < n; ++i) {
      const long long den = h.random_int(2, 12);
      const long long num = h.random_int(0, static_cast<int>(den) - 1);
      boundary.points.push_back({"p" + std::to_string(i), Rational(num, den)});
    }
    if (boundary.total() >= Rational(2)) { --trial; continue; }

    const Verdict v = li_p1(boundary);

    // agreement with the exact delta formula
    Rational total(0), biggest(0);
    bool any = false;
    for (const auto& p : boundary.points) {
      if (p.coeff.is_zero()) continue;
      any = true;
      total += p.coeff;
      biggest = max(biggest, p.coeff);
    }
    const Rational delta = any ? (Rational(2) - Rational(2) * biggest) / (Rational(2) - total)
                               : Rational(1);
    if (delta > Rational(1))
      Harness::require(v.level == Level::KStable, "delta > 1 must mean K-stable");
    else if (delta == Rational(1))
      Harness::require(v.level == Level::KPolystable ||
                           v.level == Level::KSemistableNotPolystable,
                       "delta = 1 must mean semistable");
    else
      Harness::require(v.level == Level::KUnstable, "delta < 1 must mean K-unstable");

    // permutation invariance
    BoundaryDivisor shuffled = boundary;
    std::shuffle(shuffled.points.begin(), shuffled.points.end(), h.rng);
    Harness::require(li_p1(shuffled).level == v.level, "level must be permutation invariant");
  }
  detail << "200 random boundaries: level matches the exact delta sign, permutation invariant";
}

void solver_properties(Harness& h, std::ostringstream& detail) {
  for (const char* name : {"MM2.28", "MM3.14", "MM2.23a0", "MM2.23b"}) {
    const RefinedSeries s = builtin_series(name);
    const PiecewisePoly alpha_vol = s.vol.times_poly(Poly::monomial(1));
    const PiecewisePoly alpha2_vol = s.vol.times_poly(Poly::monomial(2));
    for (int i = 0; i < 3; ++i) {
      const double eta = h.random_double(-1.0, 1.0);
      const double step = 1e-4;
      const double diff = (alpha_vol.exp_moment(eta + step, s.moment) -
                           alpha_vol.exp_moment(eta - step, s.moment)) /
                          (2 * step);
      const double derivative = -alpha2_vol.exp_moment(eta, s.moment);
      Harness::require(derivative < 0.0, "phi' must be negative");
      Harness::require(rel_near(diff, derivative, 1e-6),
                       std::string(name) + ": dphi/deta mismatch at eta = " +
                           std::to_string(eta));
    }
  }
  const SolitonSolve sym = solve_soliton(symmetric_fixture(), 1e-12);
  Harness::require(std::fabs(sym.eta0) <= 1e-12,
                   "symmetric soliton eta0 = " + std::to_string(sym.eta0));
  detail << "phi' = -int a^2 e^{-eta a} vol < 0 by finite differences; symmetric eta0 = 0";
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::string& filter, std::uint64_t seed) {
  Harness h;
  h.filter = filter;
  h.rng.seed(seed);

  h.run("conic-s-zariski", [](std::ostringstream& d) { conic_s_zariski(d); });
  h.run("conic-point-s", [](std::ostringstream& d) { conic_point_s(d); });
  h.run("conic-delta", [](std::ostringstream& d) { conic_delta(d); });
  h.run("soliton-2.23b", [](std::ostringstream& d) { soliton_2_23b(d); });
  h.run("moments-2.28", [](std::ostringstream& d) { moments_2_28(d); });
  h.run("sweep-2.28-3.14", [](std::ostringstream& d) { sweep_2_28_3_14(d); });
  h.run("lambda-identity", [](std::ostringstream& d) { lambda_identity(d); });
  h.run("dh-normalization", [&](std::ostringstream& d) { dh_normalization(h, d); });
  h.run("kernel-oracle", [&](std::ostringstream& d) { kernel_oracle(h, d); });
  h.run("li-criterion", [&](std::ostringstream& d) { li_criterion(h, d); });
  h.run("solver-properties", [&](std::ostringstream& d) { solver_properties(h, d); });
  return h.results;
}

}  // namespace kstab
