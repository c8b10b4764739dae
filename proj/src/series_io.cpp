#include "kstab/series_io.hpp"

#include <fstream>
#include <sstream>

#include "kstab/toml.hpp"

namespace kstab {

namespace {

Rational rat(const toml::Value& table, const std::string& key) {
  return Rational::parse(toml::get_string(table, key));
}

Poly poly_from(const std::vector<toml::Value>& coeffs, const std::string& what) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (const auto& v : coeffs) {
    if (!v.is_string()) throw Error(ErrorCode::ParseError, what + " coefficients must be scalars");
    c.push_back(Rational::parse(v.str));
  }
  return Poly(std::move(c));
}

// piece tables carrying {from, to, <key> = [coeffs]} must tile [lo, hi]
PiecewisePoly pieces_from(const std::vector<toml::Value>& tables, const std::string& coeff_key,
                          const Rational& lo, const Rational& hi, const std::string& what) {
  if (tables.empty()) throw Error(ErrorCode::ParseError, what + " has no pieces");
  std::vector<Rational> bps;
  std::vector<Poly> pieces;
  for (const auto& t : tables) {
    if (!t.is_table()) throw Error(ErrorCode::ParseError, what + " pieces must be tables");
    const Rational from = rat(t, "from");
    const Rational to = rat(t, "to");
    if (bps.empty()) {
      if (from != lo)
        throw Error(ErrorCode::ParseError, what + " pieces must start at " + lo.str());
      bps.push_back(from);
    } else if (from != bps.back()) {
      throw Error(ErrorCode::ParseError, what + " pieces must be contiguous (gap at " +
                                             from.str() + ")");
    }
    bps.push_back(to);
    pieces.push_back(poly_from(toml::get_array(t, coeff_key), what));
  }
  if (bps.back() != hi)
    throw Error(ErrorCode::ParseError, what + " pieces must end at " + hi.str());
  return PiecewisePoly(std::move(bps), std::move(pieces));
}

}  // namespace

RefinedSeries parse_series(const std::string& text, const std::string& origin) {
  toml::Value doc;
  try {
    doc = toml::parse(text);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, origin + ": " + e.what());
  }

  const toml::Value& series = toml::get(doc, "series");

  TargetModel target;
  target.kind = target_kind_from_string(toml::get_string(series, "target"));
  target.base_degree = rat(series, "vol_of_L");

  const auto& moment_arr = toml::get_array(series, "moment");
  if (moment_arr.size() != 2 || !moment_arr[0].is_string() || !moment_arr[1].is_string())
    throw Error(ErrorCode::ParseError, "moment must be [lo, hi]");
  const Rational lo = Rational::parse(moment_arr[0].str);
  const Rational hi = Rational::parse(moment_arr[1].str);
  if (!(lo < hi)) throw Error(ErrorCode::ParseError, "moment interval is empty");

  PiecewisePoly f = pieces_from(toml::get_array(doc, "piece"), "f", lo, hi, "mobile part");

  std::vector<FixedPart> fixed;
  if (const toml::Value* fixed_tables = toml::find(doc, "fixed")) {
    if (!fixed_tables->is_array())
      throw Error(ErrorCode::ParseError, "[[fixed]] must be an array of tables");
    for (const auto& t : fixed_tables->array) {
      FixedPart fp{toml::get_string(t, "label"),
                   pieces_from(toml::get_array(t, "pieces"), "k", lo, hi,
                               "fixed part '" + toml::get_string(t, "label") + "'"),
                   rat(t, "degree")};
      fixed.push_back(std::move(fp));
    }
  }

  if (const toml::Value* boundary = toml::find(doc, "boundary")) {
    for (const auto& p : toml::get_array(*boundary, "points")) {
      if (!p.is_table()) throw Error(ErrorCode::ParseError, "boundary points must be tables");
      target.boundary.points.push_back({toml::get_string(p, "label"), rat(p, "coeff")});
    }
  }

  if (const toml::Value* curve = toml::find(doc, "curve")) {
    target.curve = curve_kind_from_string(toml::get_string(*curve, "kind"));
    if (const toml::Value* git = toml::find(*curve, "git"))
      target.git = git_class_from_string(git->str);
  }

  RefinedSeries s = RefinedSeries::make(toml::get_string(series, "name"),
                                        Interval(lo, hi), std::move(f), std::move(fixed),
                                        std::move(target));
  if (const toml::Value* shifts = toml::find(series, "shifts")) {
    for (const auto& v : shifts->array) s.normalization_shifts.push_back(Rational::parse(v.str));
  }
  if (const toml::Value* scale = toml::find(series, "s_scale"))
    s.s_scale = Rational::parse(scale->str);

  require_valid(s);
  return s;
}

RefinedSeries load_series(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_series(buffer.str(), path);
}

namespace {

std::string coeff_list(const Poly& p) {
  std::string out = "[";
  const int deg = p.degree();
  for (int i = 0; i <= std::max(deg, 0); ++i) {
    if (i) out += ", ";
    out += '"' + p.coeff(static_cast<size_t>(i)).str() + '"';
  }
  return out + "]";
}

}  // namespace

std::string serialize_series(const RefinedSeries& s) {
  std::ostringstream os;
  os << "[series]\n";
  os << "name = \"" << s.name << "\"\n";
  os << "target = \"" << to_string(s.target.kind) << "\"\n";
  os << "vol_of_L = \"" << s.target.base_degree.str() << "\"\n";
  os << "moment = [\"" << s.moment.lo.str() << "\", \"" << s.moment.hi.str() << "\"]\n";
  if (!s.normalization_shifts.empty()) {
    os << "shifts = [";
    for (size_t i = 0; i < s.normalization_shifts.size(); ++i)
      os << (i ? ", " : "") << '"' << s.normalization_shifts[i].str() << '"';
    os << "]\n";
  }
  if (s.s_scale != Rational(1)) os << "s_scale = \"" << s.s_scale.str() << "\"\n";

  for (size_t i = 0; i < s.mobile_f.piece_count(); ++i) {
    os << "\n[[piece]]\n";
    os << "from = \"" << s.mobile_f.breakpoints()[i].str() << "\"\n";
    os << "to = \"" << s.mobile_f.breakpoints()[i + 1].str() << "\"\n";
    os << "f = " << coeff_list(s.mobile_f.piece(i)) << "\n";
  }

  for (const auto& fp : s.fixed_parts) {
    os << "\n[[fixed]]\n";
    os << "label = \"" << fp.label << "\"\n";
    os << "degree = \"" << fp.degree.str() << "\"\n";
    os << "pieces = [";
    for (size_t i = 0; i < fp.k.piece_count(); ++i) {
      if (i) os << ", ";
      os << "{from = \"" << fp.k.breakpoints()[i].str() << "\", to = \""
         << fp.k.breakpoints()[i + 1].str() << "\", k = " << coeff_list(fp.k.piece(i)) << "}";
    }
    os << "]\n";
  }

  if (!s.target.boundary.points.empty()) {
    os << "\n[boundary]\n";
    os << "points = [";
    for (size_t i = 0; i < s.target.boundary.points.size(); ++i) {
      const auto& p = s.target.boundary.points[i];
      if (i) os << ", ";
      os << "{label = \"" << p.label << "\", coeff = \"" << p.coeff.str() << "\"}";
    }
    os << "]\n";
  }

  if (s.target.curve.has_value()) {
    os << "\n[curve]\n";
    os << "kind = \"" << to_string(*s.target.curve) << "\"\n";
    if (s.target.git.has_value()) os << "git = \"" << to_string(*s.target.git) << "\"\n";
  }
  return os.str();
}

}  // namespace kstab
