#include "atomfield/angular/rational.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cctype>
#include <stdexcept>

namespace atomfield {

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  }
  BigInt value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  Rational result;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), whole);
    BigInt den = parse_integer(text.substr(slash + 1), whole);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(whole) + "'");
    result = Rational(num, den);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
      throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
    BigInt num = int_part.empty() ? BigInt(0) : parse_integer(int_part, whole);
    BigInt den = 1;
    for (char c : frac_part) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
      }
      num = num * 10 + (c - '0');
      den *= 10;
    }
    result = Rational(num, den);
  } else {
    result = Rational(parse_integer(text, whole));
  }
  return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& value) {
  const BigInt num = numerator(value);
  const BigInt den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& value) {
  return static_cast<double>(to_long_double(value));
}

long double to_long_double(const Rational& value) {
  using Float = boost::multiprecision::cpp_bin_float_50;
  Float num(numerator(value));
  Float den(denominator(value));
  return static_cast<long double>(num / den);
}

BigInt factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of a negative integer");
  BigInt result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

Rational power(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("zero raised to a negative power");
    return Rational(1) / power(base, -exponent);
  }
  Rational result = 1;
  Rational factor = base;
  unsigned e = static_cast<unsigned>(exponent);
  while (e != 0) {
    if (e & 1u) result *= factor;
    factor *= factor;
    e >>= 1u;
  }
  return result;
}

bool rational_sqrt(const Rational& value, Rational& root) {
  if (value < 0) return false;
  const BigInt num = numerator(value);
  const BigInt den = denominator(value);
  const BigInt num_root = boost::multiprecision::sqrt(num);
  const BigInt den_root = boost::multiprecision::sqrt(den);
  if (num_root * num_root != num || den_root * den_root != den) return false;
  root = Rational(num_root, den_root);
  return true;
}

}  // namespace atomfield
