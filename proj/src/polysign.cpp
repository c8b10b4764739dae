#include "kstab/polysign.hpp"

#include <cmath>
#include <optional>
#include <vector>

namespace kstab {

namespace {

// sign of s + t * sqrt(D) with D > 0, all exact
int surd_sign(const Rational& s, const Rational& t, const Rational& D) {
  if (t.is_zero()) return s.sign();
  if (t.sign() > 0) {
    if (s.sign() >= 0) return 1;
    // s < 0: compare s^2 against t^2 D
    const Rational lhs = s * s, rhs = t * t * D;
    if (lhs < rhs) return 1;
    if (lhs > rhs) return -1;
    return 0;
  }
  return -surd_sign(-s, -t, D);
}

// critical point r = (-beta + sgn*sqrt(D)) / (2*gamma) of a cubic with
// derivative gamma x^2 + beta x + delta; all queries about r reduce to
// signs in Q[sqrt(D)].
struct QuadraticRoot {
  Rational gamma, beta, D;  // D = beta^2 - 4*gamma*delta > 0
  int branch;               // +1 or -1

  // sign of (r - q) for rational q
  int compare(const Rational& q) const {
    // r - q = (-beta - 2*gamma*q + branch*sqrt(D)) / (2*gamma)
    const Rational s = -beta - Rational(2) * gamma * q;
    const int num = surd_sign(s, Rational(branch), D);
    return gamma.sign() > 0 ? num : -num;
  }

  // sign of p(r): reduce p modulo the derivative, evaluate the linear rest
  int value_sign(const Poly& p, const Poly& dp) const {
    // remainder of p mod dp has degree <= 1, computed by repeated reduction
    Poly rem = p;
    while (rem.degree() >= 2) {
      const int d = rem.degree();
      // subtract (lead/gamma) x^{d-2} * dp
      const Rational factor = rem.coeffs().back() / gamma;
      rem = rem - Poly::monomial(static_cast<unsigned>(d - 2), factor) * dp;
    }
    const Rational u1 = rem.coeff(1), u0 = rem.coeff(0);
    // u1 r + u0 = (2 gamma u0 - u1 beta + branch * u1 sqrt(D)) / (2 gamma)
    const Rational s = Rational(2) * gamma * u0 - u1 * beta;
    const int num = surd_sign(s, Rational(branch) * u1, D);
    return gamma.sign() > 0 ? num : -num;
  }

  double approx() const {
    const double sq = std::sqrt(D.to_double());
    return (-beta.to_double() + branch * sq) / (2.0 * gamma.to_double());
  }
};

// rational point near x where pred holds; pred is an open condition so a
// fine enough dyadic always exists
std::optional<Rational> dyadic_witness(const Poly& p, double x, int want_sign,
                                       const Rational& a, const Rational& b) {
  for (int k = 16; k <= 52; k += 4) {
    const double scale = std::ldexp(1.0, k);
    const Rational cand(static_cast<long long>(std::llround(x * scale)),
                        static_cast<long long>(scale));
    if (cand <= a || cand >= b) continue;
    if (p(cand).sign() == want_sign) return cand;
  }
  return std::nullopt;
}

std::vector<Rational> sample_grid(const Rational& a, const Rational& b) {
  std::vector<Rational> pts;
  pts.reserve(66);
  pts.push_back(a);
  const Rational step = (b - a) / Rational(65);
  for (int i = 1; i <= 64; ++i) pts.push_back(a + Rational(i) * step);
  pts.push_back(b);
  return pts;
}

std::vector<QuadraticRoot> interior_critical_points(const Poly& p, const Rational& a,
                                                    const Rational& b) {
  std::vector<QuadraticRoot> inside;
  const Poly dp = p.derivative();
  if (dp.degree() != 2) return inside;  // callers handle lower degrees directly
  const Rational gamma = dp.coeff(2), beta = dp.coeff(1), delta = dp.coeff(0);
  const Rational D = beta * beta - Rational(4) * gamma * delta;
  if (D.sign() <= 0) return inside;  // no simple real critical points
  for (int branch : {-1, +1}) {
    QuadraticRoot r{gamma, beta, D, branch};
    if (r.compare(a) > 0 && r.compare(b) < 0) inside.push_back(r);
  }
  return inside;
}

}  // namespace

SignReport check_nonnegative(const Poly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) return {SignOutcome::Proven};
  if (p(a).sign() < 0) return {SignOutcome::Violated, a};
  if (p(b).sign() < 0) return {SignOutcome::Violated, b};

  const int deg = p.degree();
  if (deg <= 1) return {SignOutcome::Proven};  // endpoint values bound a line

  if (deg == 2) {
    // minimum can only be interior when the parabola opens upward
    if (p.coeff(2).sign() > 0) {
      const Rational vertex = -p.coeff(1) / (Rational(2) * p.coeff(2));
      if (a < vertex && vertex < b && p(vertex).sign() < 0)
        return {SignOutcome::Violated, vertex};
    }
    return {SignOutcome::Proven};
  }

  if (deg == 3) {
    const Poly dp = p.derivative();
    for (const auto& r : interior_critical_points(p, a, b)) {
      if (r.value_sign(p, dp) < 0) {
        if (auto w = dyadic_witness(p, r.approx(), -1, a, b))
          return {SignOutcome::Violated, *w};
        return {SignOutcome::Violated, (a + b) / Rational(2)};  // unreachable
      }
    }
    return {SignOutcome::Proven};
  }

  for (const Rational& x : sample_grid(a, b))
    if (p(x).sign() < 0) return {SignOutcome::Violated, x};
  return {SignOutcome::Sampled};
}

SignReport check_positive_interior(const Poly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) return {SignOutcome::Violated, (a + b) / Rational(2)};

  const int deg = p.degree();
  if (deg <= 1) return {SignOutcome::Proven};  // nonneg line vanishing inside is zero

  if (deg == 2) {
    if (p.coeff(2).sign() > 0) {
      const Rational vertex = -p.coeff(1) / (Rational(2) * p.coeff(2));
      if (a < vertex && vertex < b && p(vertex).is_zero())
        return {SignOutcome::Violated, vertex};
    }
    return {SignOutcome::Proven};
  }

  if (deg == 3) {
    const Poly dp = p.derivative();
    for (const auto& r : interior_critical_points(p, a, b)) {
      if (r.value_sign(p, dp) == 0) {
        // the zero may be irrational; report a nearby dyadic for the
        // message, the vanishing itself was established exactly
        const double x = r.approx();
        return {SignOutcome::Violated,
                Rational(static_cast<long long>(std::llround(x * 65536.0)), 65536)};
      }
    }
    return {SignOutcome::Proven};
  }

  for (const Rational& x : sample_grid(a, b))
    if (x != a && x != b && p(x).sign() <= 0) return {SignOutcome::Violated, x};
  return {SignOutcome::Sampled};
}

}  // namespace kstab
