#pragma once

#include "spinharm/rational.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace spinharm {

// Exact multiple of 1/2, stored as twice the value. Quantum numbers (l, m),
// sine-power exponents and phi frequencies all live here; the parity of
// `twice` distinguishes integers from half-odd-integers.
class HalfInteger {
 public:
  HalfInteger() = default;
  static HalfInteger from_twice(BigInt twice) { return HalfInteger(std::move(twice)); }
  static HalfInteger whole(long long n) { return HalfInteger(BigInt(n) * 2); }

  const BigInt& twice() const { return twice_; }
  bool is_integer() const { return twice_ % 2 == 0; }
  bool is_half_odd() const { return !is_integer(); }
  bool is_zero() const { return twice_ == 0; }
  bool is_negative() const { return twice_ < 0; }

  HalfInteger abs() const { return from_twice(twice_ < 0 ? BigInt(-twice_) : twice_); }

  // Parity class under shifts by 2: twice() mod 4, normalized to {0,1,2,3}.
  // Two sine powers are inter-convertible through sin^2 = 1 - cos^2 exactly
  // when they share this class.
  int parity_class() const {
    BigInt rem = twice_ % 4;
    int r = rem.convert_to<int>();
    return r < 0 ? r + 4 : r;
  }

  Rational to_rational() const { return Rational(twice_, 2); }
  double to_double() const { return to_rational().convert_to<double>(); }

  /// Requires an integer value that fits in long long.
  long long to_integer() const;

  HalfInteger operator-() const { return from_twice(-twice_); }
  friend HalfInteger operator+(const HalfInteger& a, const HalfInteger& b) {
    return from_twice(a.twice_ + b.twice_);
  }
  friend HalfInteger operator-(const HalfInteger& a, const HalfInteger& b) {
    return from_twice(a.twice_ - b.twice_);
  }
  friend bool operator==(const HalfInteger& a, const HalfInteger& b) = default;
  friend std::strong_ordering operator<=>(const HalfInteger& a, const HalfInteger& b) {
    if (a.twice_ < b.twice_) return std::strong_ordering::less;
    if (a.twice_ > b.twice_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "3", "-3", "5/2", "-5/2".
  std::string str() const;

  /// Accepts "3", "5/2", "-5/2", "2.5", "-2.5". Returns nullopt on anything else.
  static std::optional<HalfInteger> parse(std::string_view s);

 private:
  explicit HalfInteger(BigInt twice) : twice_(std::move(twice)) {}
  BigInt twice_ = 0;
};

inline HalfInteger half(long long twice) { return HalfInteger::from_twice(BigInt(twice)); }

/// l(l+1) as an exact rational.
inline Rational l_times_l_plus_one(const HalfInteger& l) {
  Rational lv = l.to_rational();
  return lv * (lv + 1);
}

}  // namespace spinharm
