#pragma once

#include <functional>
#include <string>
#include <vector>

#include "kstab/weights.hpp"

namespace kstab {

struct DHDensity {
  std::function<double(double)> density;  // a -> g(a) vol(a) / V^g on the moment interval
  double total;                           // quadrature of the density, = 1
  double barycenter;                      // quadrature of a * density, = -Fut_g
};

struct MuValue {
  std::string label;
  Scalar mu;  // integral of the fixed-part coefficient against DH^g
};

struct LambdaFixed {
  Scalar lambda;           // integral of f against DH^g
  std::vector<MuValue> mus;
};

struct DeltaPoint {
  std::string label;  // point label or "generic"
  Rational a;         // log discrepancy 1 - boundary coefficient
  Scalar s;           // S^g at the point, in the anticanonical normalization
  Scalar ratio;       // a / s
};

struct DeltaReport {
  Scalar delta;        // min of the ratios below
  std::string argmin;
  std::vector<DeltaPoint> per_point;
};

// V^g, exact for constant weights
Scalar weighted_volume(const RefinedSeries& s, const WeightSpec& g);

DHDensity dh(const RefinedSeries& s, const WeightSpec& g);

// S(L; E) = (1 / vol L) * int_0^tau vol(L - tE) dt, exact
Rational s_from_zariski(const ZariskiVolProfile& z);

// Fujita-Li difference A - S
Scalar fl(const Rational& a_log_discrepancy, const Scalar& s_value);

// lambda = int f dDH^g and mu_j = int k_j dDH^g, carried to the
// anticanonical normalization by the series' S-scale
LambdaFixed lambda_fixed(const RefinedSeries& s, const WeightSpec& g);

// S^g of the refinement at a point of the projective line: f/2 against
// DH^g, plus the fixed-part coefficient at a labelled point. Reported in
// the stored normalization (no S-scale).
Scalar s_point_p1(const RefinedSeries& s, const WeightSpec& g, const std::string& label);

// delta over the candidate points Supp(boundary) + fixed-part labels +
// generic; ratios use anticanonically normalized S-values
DeltaReport delta_p1(const RefinedSeries& s, const WeightSpec& g);

// lambda * deg L - (deg(-K) - deg Delta - sum mu_j deg F_j); zero for
// weight functions (degree-wise form of lambda L = -(K + Delta + F))
Scalar lambda_identity_gap(const RefinedSeries& s, const WeightSpec& g);
Scalar lambda_identity_gap(const RefinedSeries& s, const LambdaFixed& lf);

}  // namespace kstab
