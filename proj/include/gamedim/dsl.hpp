#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gamedim/game_graph.hpp"
#include "gamedim/rulesets.hpp"

namespace gamedim {

enum class MoveKind { TakeAny, TakeSet, TakeHeaps };

/// A heap-subtraction ruleset:
///   TakeAny   - remove any positive number from one heap (Nim)
///   TakeSet   - remove exactly s from one heap, s from a fixed set
///   TakeHeaps - remove exactly s from one heap, s a current heap size
struct RulesetSpec {
  std::string name;
  HeapPosition start_heaps;
  MoveKind move_kind = MoveKind::TakeAny;
  std::vector<std::uint32_t> take_set;  // sorted, only for TakeSet

  friend bool operator==(const RulesetSpec&, const RulesetSpec&) = default;
};

struct ParseDiagnostic {
  std::size_t line = 1;    // 1-based
  std::size_t column = 1;  // 1-based
  std::string message;

  std::string to_string() const;
};

using ParseResult = std::variant<RulesetSpec, ParseDiagnostic>;

/// Parses
///
///   ruleset := "game" ident? "{" decl* "}"
///   decl    := "heaps" ":" "[" int ("," int)* "]" ";"
///            | "move" ":" ( "take-any" | "take-heaps"
///                         | "take-set" "{" int ("," int)* "}" ) ";"
///
/// with '#' line comments. Exactly one heaps and one move declaration are
/// required. The first error is reported with its location.
ParseResult parse_ruleset(std::string_view text);

/// Canonical text form; parse_ruleset(print_ruleset(s)) == s.
std::string print_ruleset(const RulesetSpec& spec);

/// Reachable game graph of the ruleset from its start heaps.
GameGraph build_from_spec(const RulesetSpec& spec);

}  // namespace gamedim
