#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kstab/piecewise.hpp"

namespace kstab {

enum class TargetKind { ProjLine, ProjPlane, QuadricSurface };
enum class CurveKind { Conic, PlaneCubic, Biconic };
enum class GitClass { Stable, Polystable, StrictlySemistable, Unstable };

std::string to_string(TargetKind k);
std::string to_string(CurveKind k);
std::string to_string(GitClass g);
TargetKind target_kind_from_string(const std::string& s);
CurveKind curve_kind_from_string(const std::string& s);
GitClass git_class_from_string(const std::string& s);

struct BoundaryPoint {
  std::string label;
  Rational coeff;
  friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;
};

// Boundary divisor on the projective line: labelled points with
// coefficients in [0, 1), distinct labels, total < 2 in log Fano use.
struct BoundaryDivisor {
  std::vector<BoundaryPoint> points;

  Rational total() const;
  bool has(const std::string& label) const;
  Rational coeff_of(const std::string& label) const;  // 0 when absent
  friend bool operator==(const BoundaryDivisor&, const BoundaryDivisor&) = default;
};

// The one-dimensional or two-dimensional model the refinement lands on,
// together with the degree datum of its polarization L:
//   proj-line  L = O(1)      vol(L) = 1    -K.L = 2
//   proj-plane L = O(1)      vol(L) = 1    -K.L = 3
//   quadric    L = O(1,1)    vol(L) = 2    -K.L = 4
struct TargetModel {
  TargetKind kind = TargetKind::ProjLine;
  Rational base_degree = Rational(1);  // vol(L)
  BoundaryDivisor boundary;            // proj-line only
  std::optional<CurveKind> curve;      // surfaces only
  std::optional<GitClass> git;         // cubic / biconic only

  int dimension() const { return kind == TargetKind::ProjLine ? 1 : 2; }
  Rational anticanonical_degree() const;  // -K.L in the table above

  friend bool operator==(const TargetModel&, const TargetModel&) = default;
};

struct FixedPart {
  std::string label;
  PiecewisePoly k;   // coefficient of the fixed divisor, per slice
  Rational degree;   // F_j . L on the target model
  friend bool operator==(const FixedPart&, const FixedPart&) = default;
};

// Normalized rank-one refined linear series: slice volumes over the moment
// interval, the mobile multiple of L, and the fixed-part ledger. The slice
// volume is always vol(L) * f^dim and is kept stored so that validation can
// reject inconsistent hand-built data.
struct RefinedSeries {
  std::string name;
  Interval moment{Rational(0), Rational(1)};
  PiecewisePoly vol = PiecewisePoly::constant(Rational(1), {Rational(0), Rational(1)});
  PiecewisePoly mobile_f = PiecewisePoly::constant(Rational(1), {Rational(0), Rational(1)});
  std::vector<FixedPart> fixed_parts;
  TargetModel target;
  std::vector<Rational> normalization_shifts;  // absorbed log discrepancies, metadata only
  // Factor carrying stored S-values to the anticanonical normalization
  // (for entries stored against a non-anticanonical polarization).
  Rational s_scale = Rational(1);

  // Builds vol from the mobile part; the standard construction path.
  static RefinedSeries make(std::string name, Interval moment, PiecewisePoly mobile_f,
                            std::vector<FixedPart> fixed_parts, TargetModel target);

  const FixedPart* fixed_part(const std::string& label) const;

  friend bool operator==(const RefinedSeries&, const RefinedSeries&) = default;
};

// t -> vol(L - tE) on [0, tau], for the S-invariant of a divisorial
// valuation out of a Zariski-decomposition computation.
struct ZariskiVolProfile {
  std::string name;
  Rational vol_of_L;
  PiecewisePoly profile = PiecewisePoly::constant(Rational(1), {Rational(0), Rational(1)});
  Rational tau;
  friend bool operator==(const ZariskiVolProfile&, const ZariskiVolProfile&) = default;
};

struct Violation {
  std::string clause;   // the invariant that failed, e.g. "vol >= 0"
  std::string detail;
  bool sampled = false;  // established by sampling only (degree > 3 pieces)
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::vector<std::string> notes;  // passed-by-sampling disclosures
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const RefinedSeries& s);
ValidationReport validate(const ZariskiVolProfile& z);

// Throws ValidationError naming the first violated clause.
void require_valid(const RefinedSeries& s);
void require_valid(const ZariskiVolProfile& z);

}  // namespace kstab
