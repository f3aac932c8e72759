#pragma once

#include "atomfield/angular/rational.hpp"

#include <map>
#include <optional>
#include <string>

namespace atomfield::angular {

/// Exact value sign * sqrt(radicand) with a non-negative rational radicand.
///
/// This is the value domain of Clebsch-Gordan coefficients: the Racah sum is
/// rational, and everything else in the closed form sits under one radical.
/// The set is closed under multiplication but not addition; sums of
/// coefficients go through SurdSum.
class SqrtRational {
 public:
  SqrtRational() = default;

  /// Throws std::invalid_argument for a negative radicand or |sign| > 1.
  SqrtRational(int sign, Rational radicand);

  /// The exact rational v, represented as sign(v) * sqrt(v^2).
  static SqrtRational from_rational(const Rational& value);

  int sign() const { return sign_; }
  const Rational& radicand() const { return radicand_; }
  bool is_zero() const { return sign_ == 0; }

  /// Engaged iff the radicand is the square of a rational.
  std::optional<Rational> to_rational() const;

  /// Like to_rational() but throws std::logic_error when the value is irrational.
  Rational require_rational() const;

  double to_double() const;

  /// "0", "-1/2", or "+sqrt(2/3)" style text.
  std::string str() const;

  SqrtRational operator-() const { return SqrtRational(-sign_, radicand_); }
  friend SqrtRational operator*(const SqrtRational& a, const SqrtRational& b);
  SqrtRational& operator*=(const SqrtRational& other) { return *this = *this * other; }

  friend bool operator==(const SqrtRational& a, const SqrtRational& b) {
    return a.sign_ == b.sign_ && a.radicand_ == b.radicand_;
  }

 private:
  int sign_ = 0;
  Rational radicand_ = 0;
};

/// Exact finite sum of SqrtRationals, kept as sum_k q_k * sqrt(k) over
/// distinct square-free integers k.
///
/// Square-free reduction uses trial division; radicands built from factorials
/// of moderate arguments (every CG coefficient with l <= 25) reduce exactly.
class SurdSum {
 public:
  SurdSum() = default;
  explicit SurdSum(const SqrtRational& term) { add(term); }

  SurdSum& add(const SqrtRational& term);
  SurdSum& operator+=(const SqrtRational& term) { return add(term); }
  SurdSum& operator-=(const SqrtRational& term) { return add(-term); }

  bool is_zero() const { return terms_.empty(); }
  std::optional<Rational> to_rational() const;
  Rational require_rational() const;
  double to_double() const;
  std::size_t surd_count() const { return terms_.size(); }

 private:
  std::map<BigInt, Rational> terms_;  // square-free part -> rational coefficient
};

}  // namespace atomfield::angular
