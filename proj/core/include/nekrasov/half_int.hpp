#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "nekrasov/rational.hpp"

namespace nekrasov {

/// Exact element of (1/2)Z, stored doubled.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_doubled(std::int64_t doubled) {
    HalfInt h;
    h.doubled_ = doubled;
    return h;
  }
  static constexpr HalfInt from_int(std::int64_t value) { return from_doubled(2 * value); }

  /// Accepts "p" or "p/2" (optionally signed). Throws std::invalid_argument
  /// for any other denominator.
  static HalfInt parse(std::string_view text);

  constexpr std::int64_t doubled() const { return doubled_; }
  constexpr bool is_integer() const { return doubled_ % 2 == 0; }
  Rational to_rational() const { return Rational(static_cast<long>(doubled_), 2); }

  /// "p" or "p/2" in lowest terms.
  std::string to_string() const { return to_rational().to_string(); }

  constexpr HalfInt operator-() const { return from_doubled(-doubled_); }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) {
    return from_doubled(a.doubled_ + b.doubled_);
  }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) {
    return from_doubled(a.doubled_ - b.doubled_);
  }
  friend constexpr auto operator<=>(const HalfInt&, const HalfInt&) = default;

 private:
  std::int64_t doubled_ = 0;
};

}  // namespace nekrasov
