#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "kstab/acceptance.hpp"
#include "kstab/catalog.hpp"
#include "kstab/invariants.hpp"
#include "kstab/series_io.hpp"
#include "kstab/toml.hpp"
#include "kstab/verdict.hpp"

using json = nlohmann::json;
using namespace kstab;

namespace {

struct Options {
  std::string input;
  std::string weight = "constant:1";
  std::string format = "table";
  std::string git;
  std::string only;
  std::string family = "0,1/2,1,2,4";
  Rational conic_c = Rational(1, 2);
  double tol = 1e-12;
  int samples = 200;
  std::uint64_t seed = 20240809;
};

json scalar_json(const Scalar& v) {
  json out;
  out["decimal"] = v.value();
  if (v.is_exact()) out["exact"] = v.exact().str();
  else out["exact"] = nullptr;
  return out;
}

std::string scalar_text(const Scalar& v) {
  std::ostringstream os;
  if (v.is_exact()) os << v.exact().str() << " (" << v.value() << ")";
  else os << v.value();
  return os.str();
}

BuiltinEntry resolve_input(const Options& opt) {
  if (std::filesystem::exists(opt.input)) return load_series(opt.input);
  return builtin(opt.input, opt.conic_c);
}

RefinedSeries resolve_series(const Options& opt) {
  auto entry = resolve_input(opt);
  if (auto* s = std::get_if<RefinedSeries>(&entry)) {
    if (!opt.git.empty()) s->target.git = git_class_from_string(opt.git);
    return std::move(*s);
  }
  throw Error(ErrorCode::UnknownName, "'" + opt.input + "' names a volume profile; this command needs a series");
}

WeightSpec weight_from_fragment(const toml::Value& frag) {
  const std::string kind = toml::get_string(frag, "kind");
  if (kind == "constant") return WeightSpec::constant(Rational::parse(toml::get_string(frag, "c")));
  if (kind == "exp") return WeightSpec::exponential(std::stod(toml::get_string(frag, "eta")));
  if (kind == "polyexp") {
    std::vector<Rational> coeffs;
    for (const auto& v : toml::get_array(frag, "p")) coeffs.push_back(Rational::parse(v.str));
    return WeightSpec::poly_exp(Poly(std::move(coeffs)), std::stod(toml::get_string(frag, "eta")));
  }
  if (kind == "tabulated") {
    std::vector<std::pair<double, double>> samples;
    for (const auto& row : toml::get_array(frag, "samples")) {
      if (!row.is_array() || row.array.size() != 2)
        throw Error(ErrorCode::ParseError, "samples must be [alpha, value] pairs");
      samples.emplace_back(std::stod(row.array[0].str), std::stod(row.array[1].str));
    }
    return WeightSpec::tabulated(std::move(samples));
  }
  throw Error(ErrorCode::ParseError, "unknown weight kind '" + kind + "'");
}

// "soliton" | "constant:RAT" | "exp:FLOAT" | "polyexp:ETA:c0,c1,..." |
// "tabulated:FILE" (a document with a [weight] fragment)
WeightSpec resolve_weight(const std::string& spec, const RefinedSeries& s, double tol) {
  if (spec == "soliton") return WeightSpec::exponential(solve_soliton(s, tol).eta0);
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw Error(ErrorCode::ParseError, "weight spec '" + spec + "' (expected kind:args)");
  const std::string kind = spec.substr(0, colon);
  const std::string args = spec.substr(colon + 1);
  if (kind == "constant") return WeightSpec::constant(Rational::parse(args));
  if (kind == "exp") return WeightSpec::exponential(std::stod(args));
  if (kind == "polyexp") {
    const auto second = args.find(':');
    if (second == std::string::npos)
      throw Error(ErrorCode::ParseError, "polyexp spec needs eta:c0,c1,...");
    const double eta = std::stod(args.substr(0, second));
    std::vector<Rational> coeffs;
    std::stringstream rest(args.substr(second + 1));
    for (std::string tok; std::getline(rest, tok, ',');) coeffs.push_back(Rational::parse(tok));
    return WeightSpec::poly_exp(Poly(std::move(coeffs)), eta);
  }
  if (kind == "tabulated") return weight_from_fragment(toml::get(toml::parse_file(args), "weight"));
  throw Error(ErrorCode::ParseError, "unknown weight kind '" + kind + "'");
}

json certificate_json(const Certificate& c) {
  json out;
  out["rule"] = c.rule;
  if (!c.coefficients.empty()) {
    json coeffs = json::array();
    for (const auto& [label, value] : c.coefficients)
      coeffs.push_back({{"label", label}, {"coeff", scalar_json(value)}});
    out["coefficients"] = coeffs;
  }
  if (c.li_slack) out["li_slack"] = scalar_json(*c.li_slack);
  if (c.delta) out["delta"] = scalar_json(*c.delta);
  if (c.destabilizing_point) out["destabilizing_point"] = *c.destabilizing_point;
  if (c.model_level) out["model_level"] = to_string(*c.model_level);
  if (c.lambda) out["lambda"] = scalar_json(*c.lambda);
  if (!c.mus.empty()) {
    json mus = json::array();
    for (const auto& m : c.mus) mus.push_back({{"label", m.label}, {"mu", scalar_json(m.mu)}});
    out["mus"] = mus;
  }
  if (c.mu) out["mu"] = scalar_json(*c.mu);
  if (c.mu_bound) out["mu_bound"] = *c.mu_bound;
  if (c.git_used) out["git"] = to_string(*c.git_used);
  return out;
}

int level_exit_code(Level level) {
  switch (level) {
    case Level::KStable:
    case Level::KPolystable: return 0;
    case Level::KSemistableNotPolystable: return 4;
    case Level::KUnstable: return 5;
  }
  return 1;
}

int cmd_info(const Options& opt) {
  auto entry = resolve_input(opt);
  if (auto* z = std::get_if<ZariskiVolProfile>(&entry)) {
    if (opt.format == "json") {
      json out{{"name", z->name},
               {"vol_of_L", z->vol_of_L.str()},
               {"tau", z->tau.str()},
               {"profile", z->profile.str("t")},
               {"S", s_from_zariski(*z).str()}};
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    std::cout << "volume profile " << z->name << "\n";
    std::cout << "  vol(L) = " << z->vol_of_L.str() << ", tau = " << z->tau.str() << "\n";
    std::cout << "  vol(L - tE) = " << z->profile.str("t") << "\n";
    std::cout << "  S(L; E) = " << s_from_zariski(*z).str() << "\n";
    return 0;
  }

  const RefinedSeries s = std::get<RefinedSeries>(std::move(entry));
  require_valid(s);
  if (opt.format == "json") {
    json out{{"name", s.name},
             {"target", to_string(s.target.kind)},
             {"vol_of_L", s.target.base_degree.str()},
             {"moment", {s.moment.lo.str(), s.moment.hi.str()}},
             {"mobile_f", s.mobile_f.str("a")},
             {"vol", s.vol.str("a")}};
    json fixed = json::array();
    for (const auto& fp : s.fixed_parts)
      fixed.push_back({{"label", fp.label}, {"degree", fp.degree.str()}, {"k", fp.k.str("a")}});
    out["fixed_parts"] = fixed;
    if (!s.target.boundary.points.empty()) {
      json boundary = json::array();
      for (const auto& p : s.target.boundary.points)
        boundary.push_back({{"label", p.label}, {"coeff", p.coeff.str()}});
      out["boundary"] = boundary;
    }
    if (s.target.curve) out["curve"] = to_string(*s.target.curve);
    if (s.target.git) out["git"] = to_string(*s.target.git);
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << "series " << s.name << "  (" << to_string(s.target.kind) << ", vol(L) = "
            << s.target.base_degree.str() << ")\n";
  std::cout << "  moment interval  [" << s.moment.lo.str() << ", " << s.moment.hi.str() << "]\n";
  std::cout << "  mobile part f    " << s.mobile_f.str("a") << "\n";
  std::cout << "  slice volume     " << s.vol.str("a") << "\n";
  for (const auto& fp : s.fixed_parts)
    std::cout << "  fixed part       " << fp.label << " (degree " << fp.degree.str() << "): "
              << fp.k.str("a") << "\n";
  for (const auto& p : s.target.boundary.points)
    std::cout << "  boundary point   " << p.label << " with coefficient " << p.coeff.str() << "\n";
  if (s.target.curve) {
    std::cout << "  fixed curve kind " << to_string(*s.target.curve);
    if (s.target.git) std::cout << " (GIT " << to_string(*s.target.git) << ")";
    std::cout << "\n";
  }
  if (!s.normalization_shifts.empty()) {
    std::cout << "  absorbed shifts  ";
    for (size_t i = 0; i < s.normalization_shifts.size(); ++i)
      std::cout << (i ? ", " : "") << s.normalization_shifts[i].str();
    std::cout << "\n";
  }
  if (s.s_scale != Rational(1))
    std::cout << "  S-scale          " << s.s_scale.str() << "\n";
  return 0;
}

int cmd_soliton(const Options& opt) {
  const RefinedSeries s = resolve_series(opt);
  const SolitonSolve sol = solve_soliton(s, opt.tol);
  if (opt.format == "json") {
    std::cout << json{{"eta0", sol.eta0}, {"residual", sol.residual},
                      {"iterations", sol.iterations}}.dump(2)
              << "\n";
  } else {
    std::cout << "eta0       " << sol.eta0 << "\n";
    std::cout << "residual   " << sol.residual << "\n";
    std::cout << "iterations " << sol.iterations << "\n";
  }
  return 0;
}

int cmd_invariants(const Options& opt) {
  const RefinedSeries s = resolve_series(opt);
  const WeightSpec g = resolve_weight(opt.weight, s, opt.tol);

  const Scalar volume = weighted_volume(s, g);
  const Scalar futaki = futaki_g(s, g);
  const bool weight_ok = is_weight(s, g, 1e-9);
  const LambdaFixed lf = lambda_fixed(s, g);

  json out{{"series", s.name},
           {"weight", g.describe()},
           {"V_g", scalar_json(volume)},
           {"Fut_g", scalar_json(futaki)},
           {"is_weight", weight_ok},
           {"lambda", scalar_json(lf.lambda)}};
  json mus = json::array();
  for (const auto& m : lf.mus) mus.push_back({{"label", m.label}, {"mu", scalar_json(m.mu)}});
  out["mus"] = mus;

  if (s.target.kind == TargetKind::ProjLine) {
    const DeltaReport report = delta_p1(s, g);
    json points = json::array();
    for (const auto& row : report.per_point)
      points.push_back({{"label", row.label},
                        {"A", row.a.str()},
                        {"S", scalar_json(row.s)},
                        {"ratio", scalar_json(row.ratio)}});
    out["points"] = points;
    out["delta"] = scalar_json(report.delta);
    out["argmin"] = report.argmin;
  }

  if (opt.format == "json") {
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  if (opt.format == "csv") {
    std::cout << "key,value\n";
    std::cout << "V_g," << volume.str() << "\n";
    std::cout << "Fut_g," << futaki.str() << "\n";
    std::cout << "is_weight," << (weight_ok ? "true" : "false") << "\n";
    std::cout << "lambda," << lf.lambda.str() << "\n";
    for (const auto& m : lf.mus) std::cout << "mu_" << m.label << "," << m.mu.str() << "\n";
    return 0;
  }

  std::cout << "series    " << s.name << "\n";
  std::cout << "weight    " << g.describe() << (weight_ok ? "" : "   [not a weight: Fut_g != 0]")
            << "\n";
  std::cout << "V^g       " << scalar_text(volume) << "\n";
  std::cout << "Fut_g     " << scalar_text(futaki) << "\n";
  std::cout << "lambda    " << scalar_text(lf.lambda) << "\n";
  for (const auto& m : lf.mus) std::cout << "mu[" << m.label << "]     " << scalar_text(m.mu) << "\n";
  if (s.target.kind == TargetKind::ProjLine) {
    const DeltaReport report = delta_p1(s, g);
    std::cout << "point S and ratios (anticanonical normalization):\n";
    for (const auto& row : report.per_point)
      std::cout << "  " << row.label << ": A = " << row.a.str() << ", S = " << scalar_text(row.s)
                << ", A/S = " << scalar_text(row.ratio) << "\n";
    std::cout << "delta     " << scalar_text(report.delta) << "  (argmin " << report.argmin
              << ")\n";
  }
  return 0;
}

int cmd_verdict(const Options& opt) {
  const RefinedSeries s = resolve_series(opt);
  const WeightSpec g = resolve_weight(opt.weight, s, opt.tol);
  const Verdict v = weighted_verdict(s, g);
  json out{{"level", to_string(v.level)}, {"certificate", certificate_json(v.certificate)}};
  std::cout << out.dump(2) << "\n";
  return level_exit_code(v.level);
}

int cmd_reproduce(const Options& opt) {
  const auto results = run_acceptance(opt.only, opt.seed);
  bool all_pass = true;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.id;
    if (!r.detail.empty()) std::cout << "  -- " << r.detail;
    std::cout << "\n";
    all_pass = all_pass && r.pass;
  }
  std::cout << (all_pass ? "all criteria passed" : "criteria FAILED") << " (" << results.size()
            << " run)\n";
  return all_pass ? 0 : 1;
}

int cmd_sweep(const Options& opt) {
  const RefinedSeries s = resolve_series(opt);
  std::vector<Rational> cs;
  std::stringstream list(opt.family);
  for (std::string tok; std::getline(list, tok, ',');) cs.push_back(Rational::parse(tok));

  struct Row { std::string c, eta, mu, verdict; };
  // family members are independent pure computations
  std::vector<std::future<Row>> futures;
  for (const Rational& c : cs) {
    futures.push_back(std::async(std::launch::async, [c, &s, &opt]() -> Row {
      Row row{c.str(), "", "", ""};
      try {
        const WeightSpec g = weight_family(s, c, opt.tol);
        for (const auto& term : g.terms())
          if (const auto* e = std::get_if<ExponentialWeight>(&term))
            row.eta = std::to_string(e->eta);
        const LambdaFixed lf = lambda_fixed(s, g);
        if (!lf.mus.empty()) row.mu = std::to_string(lf.mus.front().mu.value());
        row.verdict = to_string(weighted_verdict(s, g).level);
      } catch (const Error& e) {
        row.verdict = e.code() == ErrorCode::NoRoot ? "no-exp-weight" : error_code_name(e.code());
      }
      return row;
    }));
  }
  std::cout << "c,eta,mu,verdict\n";
  for (auto& f : futures) {
    const Row row = f.get();
    std::cout << row.c << "," << row.eta << "," << row.mu << "," << row.verdict << "\n";
  }
  return 0;
}

int cmd_export_dh(const Options& opt) {
  const RefinedSeries s = resolve_series(opt);
  const WeightSpec g = resolve_weight(opt.weight, s, opt.tol);
  const DHDensity density = dh(s, g);
  const double lo = s.moment.lo.to_double(), hi = s.moment.hi.to_double();
  const int n = std::max(opt.samples, 2);
  std::cout << "alpha,density\n";
  for (int i = 0; i < n; ++i) {
    const double a = lo + (hi - lo) * i / (n - 1);
    std::cout << a << "," << density.density(a) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted K-stability toolkit for rank-one torus refinements"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env_tol = std::getenv("KSTAB_TOL")) opt.tol = std::atof(env_tol);

  std::string conic_c_text = "1/2";
  auto add_common = [&](CLI::App* cmd, bool needs_input) {
    if (needs_input) cmd->add_option("input", opt.input, "builtin name or dataset path")->required();
    cmd->add_option("--c", conic_c_text, "boundary coefficient for the conic entry");
    cmd->add_option("--git", opt.git, "declared GIT class of the fixed curve");
    cmd->add_option("--tol", opt.tol, "solver tolerance");
    cmd->add_option("--format", opt.format, "table|json|csv");
  };

  auto* info = app.add_subcommand("info", "summarize a dataset");
  add_common(info, true);
  auto* soliton = app.add_subcommand("soliton", "solve for the exponential soliton weight");
  add_common(soliton, true);
  auto* invariants = app.add_subcommand("invariants", "weighted volume, Futaki, lambda, mu, delta");
  add_common(invariants, true);
  invariants->add_option("--weight", opt.weight, "weight spec (soliton|constant:..|exp:..|polyexp:..|tabulated:FILE)");
  auto* verdict = app.add_subcommand("verdict", "decide weighted K-stability");
  add_common(verdict, true);
  verdict->add_option("--weight", opt.weight, "weight spec");
  auto* reproduce = app.add_subcommand("reproduce", "run the acceptance suite");
  reproduce->add_option("--only", opt.only, "run only criteria whose id contains this text");
  reproduce->add_option("--seed", opt.seed, "seed for randomized criteria");
  auto* sweep = app.add_subcommand("sweep", "verdicts across a weight family");
  add_common(sweep, true);
  sweep->add_option("--family", opt.family, "comma-separated family parameters");
  auto* export_dh = app.add_subcommand("export-dh", "sample the DH density as CSV");
  add_common(export_dh, true);
  export_dh->add_option("--weight", opt.weight, "weight spec");
  export_dh->add_option("--samples", opt.samples, "number of sample rows");

  CLI11_PARSE(app, argc, argv);

  try {
    opt.conic_c = Rational::parse(conic_c_text);
    if (info->parsed()) return cmd_info(opt);
    if (soliton->parsed()) return cmd_soliton(opt);
    if (invariants->parsed()) return cmd_invariants(opt);
    if (verdict->parsed()) return cmd_verdict(opt);
    if (reproduce->parsed()) return cmd_reproduce(opt);
    if (sweep->parsed()) return cmd_sweep(opt);
    if (export_dh->parsed()) return cmd_export_dh(opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
