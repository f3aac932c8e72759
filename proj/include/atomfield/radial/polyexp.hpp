#pragma once

#include "atomfield/angular/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace atomfield::radial {

/// One term c * r^k * exp(-lambda r), lengths in units of a0.
struct PolyExpTerm {
  Rational coefficient;
  int power = 0;
  Rational decay = 0;  // lambda >= 0

  friend bool operator==(const PolyExpTerm&, const PolyExpTerm&) = default;
};

/// Raised when a radial integral has no finite value or no closed form in the
/// PolyExp class.
class RadialIntegralError : public std::runtime_error {
 public:
  enum class Kind { convergence, divergence, no_closed_form };
  RadialIntegralError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Finite sum  sum_i c_i r^{k_i} exp(-lambda_i r)  with exact rational data.
///
/// Terms are kept sorted by (lambda, k) with duplicates merged and zero
/// coefficients dropped, so two equal functions have identical term lists and
/// operator== is an exact functional comparison. Negative powers are allowed.
class PolyExp {
 public:
  PolyExp() = default;
  explicit PolyExp(std::vector<PolyExpTerm> terms);

  static PolyExp constant(const Rational& c) { return monomial(c, 0, 0); }
  static PolyExp monomial(const Rational& c, int power, const Rational& decay = 0);

  const std::vector<PolyExpTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int min_power() const;
  int max_power() const;
  Rational max_decay() const;

  PolyExp operator-() const;
  friend PolyExp operator+(const PolyExp& a, const PolyExp& b);
  friend PolyExp operator-(const PolyExp& a, const PolyExp& b);
  friend PolyExp operator*(const PolyExp& a, const PolyExp& b);
  friend PolyExp operator*(const Rational& s, const PolyExp& f);
  friend PolyExp operator*(const PolyExp& f, const Rational& s) { return s * f; }
  PolyExp& operator+=(const PolyExp& other) { return *this = *this + other; }
  PolyExp& operator-=(const PolyExp& other) { return *this = *this - other; }

  /// r^shift * f
  PolyExp times_power(int shift) const;
  PolyExp derivative() const;

  /// Direct evaluation in extended precision. Subject to cancellation near
  /// r = 0 when exponential and pure negative-power blocks cancel; use
  /// RadialEvaluator for production field evaluation.
  long double operator()(long double r) const;

  /// Laurent coefficients about r = 0 up to power min_power() + extra_orders:
  /// entry i is the coefficient of r^{first_power + i}.
  std::vector<Rational> laurent_series(int extra_orders, int& first_power) const;

  friend bool operator==(const PolyExp&, const PolyExp&) = default;

  std::string str() const;

 private:
  void normalize();
  std::vector<PolyExpTerm> terms_;
};

/// Exact integral over [0, r] as a function of r, i.e. F(r) - F(0) built
/// term-wise from  int r^n e^{-r/a} dr = -a e^{-r/a} (r^n + n a r^{n-1} + ... + n! a^n).
/// Throws RadialIntegralError(convergence) if any term has a negative power.
PolyExp integrate_lower(const PolyExp& f);

/// Exact integral over [r, infinity) as a function of r. Requires lambda > 0
/// with k >= 0, or lambda = 0 with k <= -2. Throws RadialIntegralError
/// (divergence) for lambda = 0, k >= -1 and (no_closed_form) for lambda > 0,
/// k < 0, which would produce exponential integrals.
PolyExp integrate_upper(const PolyExp& f);

/// int_0^inf f dr  exactly (every term needs lambda > 0 and k >= 0).
Rational integrate_all(const PolyExp& f);

/// Multipole coefficient of the vector potential for a current multipole j_L
/// given in units mu_B / (pi a0^4):
///   A_L(r) = 4/(2L+1) [ r^{-(L+1)} int_0^r j_L r'^{L+2} dr' + r^L int_r^inf j_L r'^{1-L} dr' ]
/// in units mu0 mu_B / (4 pi a0^2).
PolyExp vector_potential_profile(const PolyExp& current, int L);

/// Evaluator for a PolyExp that stays accurate near r = 0 and through
/// cancellation.
///
/// Terms sharing a decay are summed as one polynomial by compensated Horner
/// evaluation (about twice long-double precision). When blocks of different
/// decay are present (poles, or a constant against an exponential block) the
/// function can cancel near the origin, so below the switch radius
/// (lambda_max * r < 1) it is summed from its exact Laurent expansion, in which
/// those cancellations already happened in rational arithmetic. Whenever the
/// exponential blocks still cancel by more than four digits, the function is
/// re-evaluated from its exact terms in 50- or 100-digit floating point.
class RadialEvaluator {
 public:
  RadialEvaluator() = default;
  explicit RadialEvaluator(const PolyExp& f);

  double operator()(double r) const;
  double switch_radius() const { return switch_radius_; }

 private:
  // Dense polynomial sum_k (hi_k + lo_k) x^(first_power + k).
  struct Poly {
    int first_power = 0;
    std::vector<long double> hi;
    std::vector<long double> lo;
    void add(int power, const Rational& c);
    long double operator()(long double x, long double& magnitude) const;
  };
  struct Group {
    Rational decay;
    long double decay_value = 0.0L;
    Poly poly;
  };
  double exact_value(double r) const;

  PolyExp exact_;
  std::vector<Group> groups_;
  Poly series_;
  double switch_radius_ = 0.0;
};

}  // namespace atomfield::radial
