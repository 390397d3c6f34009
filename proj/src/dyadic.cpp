#include "gamedim/dyadic.hpp"

#include <charconv>
#include <numeric>

#include "gamedim/errors.hpp"

namespace gamedim {

namespace {

constexpr std::uint32_t kMaxExponent = 62;

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size()) {
    throw FormatError("bad rational '" + std::string(whole) + "'");
  }
  return value;
}

/// floor(a / b) for b > 0.
std::int64_t floor_div(__int128 a, __int128 b) {
  __int128 q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return static_cast<std::int64_t>(q);
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ArgumentError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  const std::int64_t den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw FormatError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash), text), den);
}

std::string Rational::to_string() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
}

Dyadic::Dyadic(std::int64_t num, std::uint32_t exponent) : num_(num), exp_(exponent) {
  if (exp_ > kMaxExponent) throw ArgumentError("dyadic exponent too large");
  while (exp_ > 0 && num_ % 2 == 0) {
    num_ /= 2;
    --exp_;
  }
}

Dyadic Dyadic::from_rational(const Rational& q) {
  const std::int64_t den = q.den();
  if ((den & (den - 1)) != 0) {
    throw ArgumentError("'" + q.to_string() + "' is not a dyadic rational");
  }
  std::uint32_t exponent = 0;
  while ((std::int64_t{1} << exponent) != den) ++exponent;
  return Dyadic(q.num(), exponent);
}

Rational Dyadic::to_rational() const { return Rational(num_, std::int64_t{1} << exp_); }

std::string Dyadic::label() const { return to_rational().to_string(); }

std::vector<Dyadic> left_options(const Dyadic& q) {
  if (q.is_integer()) {
    if (q.num() > 0) return {Dyadic(q.num() - 1, 0)};
    return {};
  }
  return {Dyadic(q.num() - 1, q.exponent())};
}

std::vector<Dyadic> right_options(const Dyadic& q) {
  if (q.is_integer()) {
    if (q.num() < 0) return {Dyadic(q.num() + 1, 0)};
    return {};
  }
  return {Dyadic(q.num() + 1, q.exponent())};
}

DyadicGame canonical_form(const Dyadic& q) {
  DyadicGame game{q, {}, {}};
  for (const Dyadic& l : left_options(q)) game.left_options.push_back(canonical_form(l));
  for (const Dyadic& r : right_options(q)) game.right_options.push_back(canonical_form(r));
  return game;
}

Dyadic simplest_dyadic(const Rational& x, const Rational& y) {
  if (!(x < y)) throw ArgumentError("simplest_dyadic needs x < y");
  const Rational zero(0);
  if (x < zero && zero < y) return Dyadic(0, 0);
  for (std::uint32_t n = 0; n <= kMaxExponent; ++n) {
    const __int128 scale = __int128{1} << n;
    // Candidate closest to zero on the side of the interval.
    std::int64_t p = 0;
    if (x >= zero) {
      p = floor_div(static_cast<__int128>(x.num()) * scale, x.den()) + 1;
    } else {
      // y <= 0: largest p with p / 2^n < y.
      const __int128 scaled = static_cast<__int128>(y.num()) * scale;
      p = floor_div(scaled, y.den());
      if (static_cast<__int128>(p) * y.den() == scaled) --p;
    }
    const Rational candidate(p, static_cast<std::int64_t>(scale));
    if (x < candidate && candidate < y) return Dyadic(p, n);
  }
  throw ArgumentError("interval too narrow for a dyadic of bounded exponent");
}

GameGraph canonical_game_graph(const Dyadic& q) {
  return build_reachable(
      "canonical", q,
      [](const Dyadic& v) {
        std::vector<Dyadic> options = left_options(v);
        for (const Dyadic& r : right_options(v)) options.push_back(r);
        return options;
      },
      [](const Dyadic& v) { return v.label(); });
}

}  // namespace gamedim
