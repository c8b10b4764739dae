#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kstab/invariants.hpp"

namespace kstab {

enum class Level { KStable, KPolystable, KSemistableNotPolystable, KUnstable };

std::string to_string(Level level);

struct WeightedCoeff {
  std::string label;
  Scalar coeff;
};

// Machine-checkable evidence behind a verdict: enough numbers to re-derive
// the level from the inputs without rerunning the pipeline.
struct Certificate {
  std::string rule;  // which clause decided the level

  // Li-criterion path on P^1
  std::vector<WeightedCoeff> coefficients;      // boundary used (model side)
  std::optional<Scalar> li_slack;               // min_i (sum_{j != i} a_j - a_i)
  std::optional<Scalar> delta;                  // 2 min_i(1 - a_i) / (2 - sum a)
  std::optional<std::string> destabilizing_point;
  std::optional<Level> model_level;             // before the weighted lift

  // weighted dispatch data
  std::optional<Scalar> lambda;
  std::vector<MuValue> mus;
  std::optional<Scalar> mu;            // the bridge coefficient
  std::optional<std::string> mu_bound; // the bound it was held against
  std::optional<GitClass> git_used;
};

struct Verdict {
  Level level;
  Certificate certificate;
};

// Stability of (P^1, boundary) by the pairwise coefficient test
// a_i < sum_{j != i} a_j, with the polystability refinements described in
// the README. Exact on rational boundaries.
Verdict li_p1(const BoundaryDivisor& boundary);

// The same test over possibly inexact coefficients (used by the weighted
// path, where fixed-part masses are floats for non-constant weights).
Verdict li_classify(std::vector<WeightedCoeff> coefficients);

// Top-level decision for a refined series under a weight function g with
// vanishing weighted Futaki invariant. Dispatches on the target model:
// P^1 goes through the Li criterion on the combined boundary, the conic
// bridge uses the 3/4 threshold, cubic and biconic bridges map the
// declared GIT class once mu lands in (0, 1).
Verdict weighted_verdict(const RefinedSeries& s, const WeightSpec& g);

// Three-point complexity-one case: K-polystable unconditionally, but the
// certificate re-derives the verdict and an inconsistency is an error.
Verdict complexity_one_three_points(const RefinedSeries& s, const WeightSpec& g);

}  // namespace kstab
