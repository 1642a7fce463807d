#pragma once

#include <compare>
#include <cstdlib>
#include <string>

namespace sw {

/// A number n/2 with n an integer, stored by its doubled value so parity is exact.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
  static constexpr HalfInt from_int(int value) { return HalfInt(2 * value); }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  /// Floor of the value; exact for integers.
  constexpr int floor() const { return twice_ >= 0 ? twice_ / 2 : -((-twice_ + 1) / 2); }
  constexpr double value() const { return 0.5 * twice_; }

  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice_ - b.twice_); }
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  std::string str() const {
    return is_integer() ? std::to_string(twice_ / 2) : std::to_string(twice_) + "/2";
  }

 private:
  constexpr explicit HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

inline constexpr HalfInt kHalf = HalfInt::from_twice(1);

}  // namespace sw
