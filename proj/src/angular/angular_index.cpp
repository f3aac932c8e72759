#include "atomfield/angular/angular_index.hpp"

#include "atomfield/angular/rational.hpp"

#include <stdexcept>

namespace atomfield::angular {

HalfInteger HalfInteger::parse(std::string_view text) {
  const Rational value = parse_rational(text);
  const Rational twice = value * 2;
  if (denominator(twice) != 1) {
    throw std::invalid_argument("'" + std::string(text) + "' is not an integer or half-integer");
  }
  const BigInt num = numerator(twice);
  if (num > 1000000 || num < -1000000) {
    throw std::invalid_argument("'" + std::string(text) + "' is out of range");
  }
  return HalfInteger(static_cast<int>(num));
}

int HalfInteger::as_int() const {
  if (!is_integer()) throw std::logic_error("expected an integer, got " + str());
  return twice_ / 2;
}

std::string HalfInteger::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

}  // namespace atomfield::angular
