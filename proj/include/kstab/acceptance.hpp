#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kstab {

struct CriterionResult {
  std::string id;
  bool pass;
  std::string detail;
};

// Runs every reproduction criterion whose id contains `filter` (all when
// empty). Randomized checks draw from a generator seeded with `seed`, so a
// run is deterministic end to end.
std::vector<CriterionResult> run_acceptance(const std::string& filter = "",
                                            std::uint64_t seed = 20240809);

}  // namespace kstab
