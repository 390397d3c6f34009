#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

namespace gamedim {

/// A signed path length or infinity. Infinity compares greater than every
/// finite value and is never produced by arithmetic on finite values.
class ExtendedDistance {
 public:
  constexpr ExtendedDistance() = default;
  constexpr explicit ExtendedDistance(std::int32_t value) : raw_(value) {}

  static constexpr ExtendedDistance infinity() { return ExtendedDistance(kInfRaw, Tag{}); }

  constexpr bool is_infinite() const { return raw_ == kInfRaw; }
  constexpr bool is_finite() const { return raw_ != kInfRaw; }

  /// Finite value; only meaningful when is_finite().
  constexpr std::int32_t value() const { return raw_; }

  /// Encoding used for hashing and packed storage; infinity has a reserved tag.
  constexpr std::int32_t raw() const { return raw_; }

  constexpr ExtendedDistance operator-() const {
    return is_infinite() ? *this : ExtendedDistance(-raw_);
  }

  friend constexpr bool operator==(ExtendedDistance, ExtendedDistance) = default;
  friend constexpr std::strong_ordering operator<=>(ExtendedDistance a, ExtendedDistance b) {
    return a.raw_ <=> b.raw_;
  }

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(raw_); }

  friend std::ostream& operator<<(std::ostream& os, ExtendedDistance d) {
    return os << d.to_string();
  }

 private:
  struct Tag {};
  static constexpr std::int32_t kInfRaw = std::numeric_limits<std::int32_t>::max();
  constexpr ExtendedDistance(std::int32_t raw, Tag) : raw_(raw) {}

  std::int32_t raw_ = 0;
};

inline constexpr ExtendedDistance kInfinity = ExtendedDistance::infinity();

}  // namespace gamedim
