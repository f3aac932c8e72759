#include "atomfield/angular/sqrt_rational.hpp"

#include <cmath>
#include <stdexcept>

namespace atomfield::angular {

namespace {

// n = square^2 * free with free square-free.
void split_square_free(BigInt n, BigInt& square, BigInt& free) {
  square = 1;
  free = 1;
  for (unsigned p = 2; BigInt(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    unsigned count = 0;
    while (n % p == 0) {
      n /= p;
      ++count;
    }
    for (unsigned i = 0; i + 1 < count; i += 2) square *= p;
    if (count % 2 == 1) free *= p;
    if (p > 100000) {
      // Remaining cofactor has only large prime factors.
      const BigInt root = boost::multiprecision::sqrt(n);
      if (root * root == n) {
        square *= root;
        n = 1;
      }
      break;
    }
  }
  free *= n;
}

}  // namespace

SqrtRational::SqrtRational(int sign, Rational radicand) : sign_(sign), radicand_(std::move(radicand)) {
  if (sign_ < -1 || sign_ > 1) throw std::invalid_argument("SqrtRational sign must be -1, 0 or +1");
  if (radicand_ < 0) throw std::invalid_argument("SqrtRational radicand must be non-negative");
  if (sign_ == 0 || radicand_ == 0) {
    sign_ = 0;
    radicand_ = 0;
  }
}

SqrtRational SqrtRational::from_rational(const Rational& value) {
  if (value == 0) return {};
  return SqrtRational(value > 0 ? 1 : -1, value * value);
}

std::optional<Rational> SqrtRational::to_rational() const {
  if (sign_ == 0) return Rational(0);
  Rational root;
  if (!rational_sqrt(radicand_, root)) return std::nullopt;
  return sign_ > 0 ? root : Rational(-root);
}

Rational SqrtRational::require_rational() const {
  auto value = to_rational();
  if (!value) throw std::logic_error("expected a rational value, got " + str());
  return *value;
}

double SqrtRational::to_double() const {
  return sign_ * std::sqrt(atomfield::to_double(radicand_));
}

std::string SqrtRational::str() const {
  if (sign_ == 0) return "0";
  if (auto value = to_rational()) return atomfield::to_string(*value);
  return std::string(sign_ > 0 ? "+" : "-") + "sqrt(" + atomfield::to_string(radicand_) + ")";
}

SqrtRational operator*(const SqrtRational& a, const SqrtRational& b) {
  return SqrtRational(a.sign_ * b.sign_, a.radicand_ * b.radicand_);
}

SurdSum& SurdSum::add(const SqrtRational& term) {
  if (term.is_zero()) return *this;
  // sqrt(p/q) = sqrt(p*q)/q
  const BigInt p = numerator(term.radicand());
  const BigInt q = denominator(term.radicand());
  BigInt square, free;
  split_square_free(p * q, square, free);
  Rational coefficient(square, q);
  if (term.sign() < 0) coefficient = -coefficient;

  auto [it, inserted] = terms_.try_emplace(free, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

std::optional<Rational> SurdSum::to_rational() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first == 1) return terms_.begin()->second;
  return std::nullopt;
}

Rational SurdSum::require_rational() const {
  auto value = to_rational();
  if (!value) throw std::logic_error("surd sum does not reduce to a rational");
  return *value;
}

double SurdSum::to_double() const {
  double total = 0.0;
  for (const auto& [free, coefficient] : terms_) {
    total += atomfield::to_double(coefficient) * std::sqrt(static_cast<double>(free));
  }
  return total;
}

}  // namespace atomfield::angular
