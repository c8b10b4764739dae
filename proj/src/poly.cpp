#include "kstab/poly.hpp"

#include <sstream>

namespace kstab {

Poly Poly::monomial(unsigned k, const Rational& c) {
  std::vector<Rational> coeffs(k + 1, Rational(0));
  coeffs[k] = c;
  return Poly(std::move(coeffs));
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Poly::eval_double(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(static_cast<long long>(i)) * c_[i];
  return Poly(std::move(d));
}

Poly Poly::antiderivative() const {
  if (c_.empty()) return Poly();
  std::vector<Rational> a(c_.size() + 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    a[i + 1] = c_[i] / Rational(static_cast<long long>(i + 1));
  return Poly(std::move(a));
}

Poly Poly::shifted(const Rational& c) const {
  // Synthetic substitution x -> x + c, one Horner pass per output coefficient.
  std::vector<Rational> out(c_.begin(), c_.end());
  const size_t n = out.size();
  for (size_t i = 0; i + 1 < n; ++i)
    for (size_t j = n - 1; j > i; --j) out[j - 1] += c * out[j];
  return Poly(std::move(out));
}

Poly Poly::pow(unsigned k) const {
  Poly result = Poly::constant(Rational(1));
  Poly base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    base = base * base;
    k >>= 1u;
  }
  return result;
}

Poly Poly::operator-() const {
  std::vector<Rational> out(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
  return Poly(std::move(out));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return Poly(std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(out));
}

Poly operator*(const Rational& c, const Poly& p) {
  std::vector<Rational> out(p.c_.size());
  for (size_t i = 0; i < p.c_.size(); ++i) out[i] = c * p.c_[i];
  return Poly(std::move(out));
}

std::string Poly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    Rational coeff = c_[i];
    if (first) {
      first = false;
    } else {
      os << (coeff.sign() < 0 ? " - " : " + ");
      coeff = abs(coeff);
    }
    const bool unit = coeff == Rational(1) && i >= 1;
    if (!unit) os << coeff.str();
    if (i >= 1) {
      if (!unit) os << "*";
      os << var;
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace kstab
