#pragma once

#include <variant>
#include <vector>

#include "kstab/series.hpp"

namespace kstab {

using BuiltinEntry = std::variant<RefinedSeries, ZariskiVolProfile>;

std::vector<std::string> builtin_names();
bool is_builtin(const std::string& name);

// Catalog lookup; throws UnknownName. "conic-P2" takes the boundary
// coefficient of the conic point as a parameter (defaults to 1/2), every
// other entry is a fixed datum.
BuiltinEntry builtin(const std::string& name, const Rational& conic_c = Rational(1, 2));

// As above but requires a series (throws UnknownName for profile entries).
RefinedSeries builtin_series(const std::string& name, const Rational& conic_c = Rational(1, 2));
ZariskiVolProfile builtin_profile(const std::string& name);

// The parameterized plane-conic entry: blowup refinement over t in [0, 2]
// with boundary (1/2) p0 + c p2 and S-scale 3 - 2c.
RefinedSeries conic_p2(const Rational& c);

}  // namespace kstab
