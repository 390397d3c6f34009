#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gamedim/game_graph.hpp"

namespace gamedim {

/// Exact rational in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  /// "p", "p/q" or "-p/q". Throws FormatError.
  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// p / 2^n in lowest terms (p odd whenever n > 0).
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(std::int64_t num, std::uint32_t exponent);

  /// Throws ArgumentError when the denominator is not a power of two.
  static Dyadic from_rational(const Rational& q);

  std::int64_t num() const { return num_; }
  std::uint32_t exponent() const { return exp_; }
  bool is_integer() const { return exp_ == 0; }
  Rational to_rational() const;

  /// "p/2^n" written out as "p/q" (e.g. "3/8"), or the integer.
  std::string label() const;

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    return a.to_rational() <=> b.to_rational();
  }

 private:
  std::int64_t num_ = 0;
  std::uint32_t exp_ = 0;
};

/// Canonical form of a number game {L | R}.
struct DyadicGame {
  Dyadic value;
  std::vector<DyadicGame> left_options;
  std::vector<DyadicGame> right_options;
};

/// Left and right options of the canonical form: n > 0 is {n-1 |}, n < 0 is
/// {| n+1}, 0 is {|}, and p/2^k is {(p-1)/2^k | (p+1)/2^k}.
std::vector<Dyadic> left_options(const Dyadic& q);
std::vector<Dyadic> right_options(const Dyadic& q);

DyadicGame canonical_form(const Dyadic& q);

/// The number of least birthday strictly between x and y: the integer of
/// smallest magnitude if one fits, else p/2^n with the least n. Throws
/// ArgumentError unless x < y.
Dyadic simplest_dyadic(const Rational& x, const Rational& y);

/// Game graph of the canonical form of q with left and right options merged
/// into one move set; positions are identified by value.
GameGraph canonical_game_graph(const Dyadic& q);

}  // namespace gamedim
