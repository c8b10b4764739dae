#pragma once

#include "kstab/poly.hpp"

namespace kstab {

enum class SignOutcome {
  Proven,    // predicate holds, exactly certified
  Violated,  // counterexample found (see witness)
  Sampled,   // no violation found, but only dense sampling was possible
};

struct SignReport {
  SignOutcome outcome;
  Rational witness{0};  // violating point when outcome == Violated
};

// Is p >= 0 on [a, b]?  Exact for degree <= 3 (endpoint values plus sign
// evaluation at critical points, computed in Q[sqrt(D)]); degree >= 4 falls
// back to 64 interior samples plus endpoints.
SignReport check_nonnegative(const Poly& p, const Rational& a, const Rational& b);

// Given p >= 0 on [a, b]: is p > 0 on the open interval (a, b)?  A witness
// is an interior zero. Same exact/sampled split as above.
SignReport check_positive_interior(const Poly& p, const Rational& a, const Rational& b);

}  // namespace kstab
