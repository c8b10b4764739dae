#pragma once

#include <string>

#include "kstab/series.hpp"

namespace kstab {

// Reads a series document (schema in the README). The slice volume is not
// stored; it is rebuilt as vol(L) * f^dim. Hard invariant violations are
// rejected with ValidationError naming the violated clause.
RefinedSeries load_series(const std::string& path);
RefinedSeries parse_series(const std::string& text, const std::string& origin = "<string>");

std::string serialize_series(const RefinedSeries& s);

}  // namespace kstab
