#pragma once

#include <variant>
#include <vector>

#include "kstab/scalar.hpp"
#include "kstab/series.hpp"

namespace kstab {

struct ConstantWeight {
  Rational c;
};
struct ExponentialWeight {
  double eta;  // g(a) = exp(-eta a)
};
struct PolyExpWeight {
  Poly p;  // g(a) = p(a) exp(-eta a), p > 0 on the moment interval
  double eta;
};
struct TabulatedWeight {
  // >= 8 strictly increasing (alpha, value > 0) samples spanning the moment
  // interval, evaluated by piecewise-linear interpolation
  std::vector<std::pair<double, double>> samples;
  double operator()(double alpha) const;
};

using WeightTerm = std::variant<ConstantWeight, ExponentialWeight, PolyExpWeight, TabulatedWeight>;

// A positive weight function on the moment interval, held as a formal sum
// of closed-form terms so that mixed families like c + exp(-eta a) keep
// each summand integrable in closed form.
class WeightSpec {
public:
  static WeightSpec constant(const Rational& c);
  static WeightSpec exponential(double eta);
  static WeightSpec poly_exp(Poly p, double eta);
  static WeightSpec tabulated(std::vector<std::pair<double, double>> samples);

  WeightSpec plus(const WeightSpec& other) const;

  const std::vector<WeightTerm>& terms() const { return terms_; }
  // true when every term is constant; such weights keep pipelines exact
  bool is_constant() const;
  Rational constant_value() const;

  double operator()(double alpha) const;
  // sample grid of tabulated terms, needed as quadrature split points
  std::vector<double> split_points() const;
  // throws ValidationError unless g > 0 on the interval per-variant rules
  void validate_on(const Interval& moment) const;

  std::string describe() const;

private:
  std::vector<WeightTerm> terms_;
};

// int_I density(a) g(a) da — exact for constant weights, closed-form
// exponential moments for exp and poly-exp, per-piece adaptive Simpson for
// tabulated weights.
Scalar weighted_integral(const PiecewisePoly& density, const WeightSpec& g, const Interval& I);

// int_P a^k g(a) vol(a) da
Scalar weighted_moment(const RefinedSeries& s, const WeightSpec& g, unsigned k);

// int_P |a| g(a) vol(a) da, the natural residual scale for weight tests
Scalar abs_alpha_moment(const RefinedSeries& s, const WeightSpec& g);

// -(first moment) / (zeroth moment); zero exactly for weight functions
Scalar futaki_g(const RefinedSeries& s, const WeightSpec& g);

// |int a g vol| <= tol * int |a| g vol
bool is_weight(const RefinedSeries& s, const WeightSpec& g, double tol);

struct SolitonSolve {
  double eta0;
  double residual;   // phi(eta0), |residual| <= tol * scale
  int iterations;
};

// Unique root of phi(eta) = int a e^{-eta a} vol da (phi is strictly
// decreasing); the bracket grows outward from [-1, 1] by doubling.
SolitonSolve solve_soliton(const RefinedSeries& s, double tol = 1e-12);

// The weight g_c = c + e^{-eta(c) a} with eta(c) solved so that the first
// moment vanishes; c = 0 gives the pure soliton weight.
WeightSpec weight_family(const RefinedSeries& s, const Rational& c, double tol = 1e-12);

}  // namespace kstab
