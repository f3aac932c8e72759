#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace atomfield {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", "p", or a finite decimal such as "1.5" or "-0.25" exactly.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rational& value);

double to_double(const Rational& value);
long double to_long_double(const Rational& value);

BigInt factorial(int n);

/// base^exponent for any integer exponent (base must be non-zero when exponent < 0).
Rational power(const Rational& base, int exponent);

/// Exact square root of a non-negative rational when it is a perfect square.
bool rational_sqrt(const Rational& value, Rational& root);

}  // namespace atomfield
