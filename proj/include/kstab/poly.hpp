#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "kstab/rational.hpp"

namespace kstab {

// Univariate polynomial with exact rational coefficients, stored in
// ascending degree. The zero polynomial has an empty coefficient list;
// otherwise the leading coefficient is nonzero.
class Poly {
public:
  Poly() = default;
  Poly(std::initializer_list<Rational> ascending) : c_(ascending) { normalize(); }
  explicit Poly(std::vector<Rational> ascending) : c_(std::move(ascending)) { normalize(); }

  static Poly constant(const Rational& c) { return Poly({c}); }
  // c * x^k
  static Poly monomial(unsigned k, const Rational& c = Rational(1));

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  Rational operator()(const Rational& x) const;
  double eval_double(double x) const;

  Poly derivative() const;
  Poly antiderivative() const;  // constant term zero
  // p(x + c)
  Poly shifted(const Rational& c) const;
  Poly pow(unsigned k) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& p);

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  std::string str(const std::string& var = "x") const;

private:
  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

}  // namespace kstab
