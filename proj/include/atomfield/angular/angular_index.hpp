#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace atomfield::angular {

/// Integer or half-integer stored as twice its value.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;
  static constexpr HalfInteger from_twice(int twice) { return HalfInteger(twice); }
  static constexpr HalfInteger from_int(int value) { return HalfInteger(2 * value); }

  /// Accepts "3/2", "-1/2", "1.5", "2". Throws std::invalid_argument otherwise.
  static HalfInteger parse(std::string_view text);

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  /// Value for integral quantities; throws std::logic_error if half-integral.
  int as_int() const;
  constexpr double value() const { return twice_ / 2.0; }
  std::string str() const;

  constexpr HalfInteger operator-() const { return HalfInteger(-twice_); }
  friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) { return HalfInteger(a.twice_ + b.twice_); }
  friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b) { return HalfInteger(a.twice_ - b.twice_); }
  friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

 private:
  constexpr explicit HalfInteger(int twice) : twice_(twice) {}
  int twice_ = 0;
};

/// Angular momentum label (l, m) with l >= 0 and |m| <= l, integer or half-integer.
struct AngularIndex {
  HalfInteger l;
  HalfInteger m;

  static constexpr AngularIndex integral(int l, int m) {
    return {HalfInteger::from_int(l), HalfInteger::from_int(m)};
  }
  static constexpr AngularIndex from_twice(int twice_l, int twice_m) {
    return {HalfInteger::from_twice(twice_l), HalfInteger::from_twice(twice_m)};
  }

  /// l >= 0, |m| <= l, and 2l, 2m of equal parity.
  constexpr bool valid() const {
    const int tl = l.twice();
    const int tm = m.twice();
    return tl >= 0 && tm <= tl && -tm <= tl && ((tl - tm) % 2 == 0);
  }

  friend constexpr auto operator<=>(const AngularIndex&, const AngularIndex&) = default;
};

}  // namespace atomfield::angular
