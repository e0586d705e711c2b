#pragma once

#include <cmath>
#include <compare>
#include <optional>
#include <ostream>

namespace ftspan {

// A value of T extended with a distinguished "infinite" element that compares
// greater than every finite value. Used for distances, where disconnection must
// never be represented by a large finite number.
template <typename T>
class Extended {
 public:
  constexpr Extended() = default;
  constexpr Extended(T value) : value_(value) {}  // NOLINT: implicit by intent

  static constexpr Extended infinite() { return Extended(); }

  constexpr bool is_infinite() const { return !value_.has_value(); }
  constexpr bool is_finite() const { return value_.has_value(); }
  constexpr T value() const { return *value_; }

  friend constexpr bool operator==(const Extended& a, const Extended& b) {
    return a.value_ == b.value_;
  }
  friend constexpr std::partial_ordering operator<=>(const Extended& a,
                                                     const Extended& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return a.is_infinite() <=> b.is_infinite();
    }
    return *a.value_ <=> *b.value_;
  }

  // Multiplication by a non-negative finite scalar; infinity is absorbing.
  friend constexpr Extended operator*(T scalar, const Extended& x) {
    return x.is_infinite() ? x : Extended(scalar * x.value());
  }

  friend std::ostream& operator<<(std::ostream& os, const Extended& x) {
    if (x.is_infinite()) return os << "inf";
    return os << x.value();
  }

 private:
  // nullopt is the infinite element.
  std::optional<T> value_;
};

using Distance = Extended<double>;
using HopCount = Extended<long>;

}  // namespace ftspan
