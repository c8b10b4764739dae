#pragma once

#include <cmath>
#include <string>

#include "kstab/rational.hpp"

namespace kstab {

// A numeric value that is an exact rational whenever every input that
// produced it was rational, and a double otherwise. Arithmetic between two
// exact values stays exact; mixing with an inexact value degrades to double.
// This is how constant-weight pipelines keep exact results while
// exponential/tabulated weights flow through as floating point.
class Scalar {
public:
  Scalar() : exact_(true) {}
  Scalar(const Rational& r) : exact_(true), r_(r), d_(r.to_double()) {}
  Scalar(int n) : Scalar(Rational(n)) {}
  explicit Scalar(double d) : exact_(false), d_(d) {}

  bool is_exact() const { return exact_; }
  const Rational& exact() const {
    if (!exact_) throw Error(ErrorCode::PreconditionFailed, "scalar is not exact");
    return r_;
  }
  double value() const { return exact_ ? r_.to_double() : d_; }

  Scalar operator-() const { return exact_ ? Scalar(-r_) : Scalar(-d_); }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return Scalar(a.r_ + b.r_);
    return Scalar(a.value() + b.value());
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return Scalar(a.r_ * b.r_);
    return Scalar(a.value() * b.value());
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return Scalar(a.r_ / b.r_);
    return Scalar(a.value() / b.value());
  }

  Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
  Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
  Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

  // Exact comparison when both sides are exact, double comparison otherwise.
  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return a.r_ == b.r_;
    return a.value() == b.value();
  }
  friend bool operator<(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return a.r_ < b.r_;
    return a.value() < b.value();
  }
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

  int sign() const {
    if (exact_) return r_.sign();
    return d_ > 0 ? 1 : d_ < 0 ? -1 : 0;
  }

  std::string str() const {
    if (exact_) return r_.str();
    return std::to_string(d_);
  }

private:
  bool exact_;
  Rational r_;
  double d_ = 0.0;
};

inline Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }

}  // namespace kstab
