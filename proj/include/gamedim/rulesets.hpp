#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gamedim/game_graph.hpp"

namespace gamedim {

// ---------------------------------------------------------------------------
// Heap games

/// Multiset of positive heap sizes, kept sorted; the empty multiset is the
/// terminal position.
class HeapPosition {
 public:
  HeapPosition() = default;
  /// Drops zero heaps and sorts; negative sizes raise ArgumentError.
  explicit HeapPosition(std::vector<std::int64_t> heaps);

  const std::vector<std::uint32_t>& heaps() const { return heaps_; }
  bool empty() const { return heaps_.empty(); }
  std::size_t count() const { return heaps_.size(); }

  /// Copy with one heap (by index) replaced by `new_size`.
  HeapPosition with_heap(std::size_t index, std::uint32_t new_size) const;

  /// "(h1,h2,...)" ascending, "0" when empty.
  std::string label() const;
  /// Inverse of label(); accepts whitespace. Throws FormatError.
  static HeapPosition parse(std::string_view text);

  friend auto operator<=>(const HeapPosition&, const HeapPosition&) = default;

 private:
  std::vector<std::uint32_t> heaps_;
};

/// Divides every heap by the gcd of all heaps.
HeapPosition gcd_normalize(const HeapPosition& position);

/// Nim: remove any positive number of stones from one heap.
GameGraph nim_graph(const HeapPosition& start);

/// HATS-Nim: subtract exactly s from one heap, where s is a heap size of the
/// current position.
GameGraph hats_graph(const HeapPosition& start);

// ---------------------------------------------------------------------------
// Bishops

struct Square {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Square&, const Square&) = default;
};

/// The two colour classes of the a x b bishop graph. Dark squares have
/// row + col even (0-indexed).
struct BishopBoards {
  int rows = 0;
  int cols = 0;
  std::vector<Square> dark_squares;
  std::vector<Square> light_squares;
  Digraph dark_component;
  Digraph light_component;
};

/// Full undirected bishop graph on the board (both colours).
Digraph bishop_board_graph(int rows, int cols);

BishopBoards bishop_boards(int rows, int cols);

struct BishopGame {
  /// Undirected product dark x light; vertex d * |light| + l.
  GameGraph game;
  BishopBoards boards;
};

/// One bishop per colour moving independently: the Cartesian product of the
/// two colour components. Labels "D(r,c)L(r,c)", 0-indexed.
BishopGame bishops_game_graph(int rows, int cols);

/// Vertex holding bishops on squares a and b (any order, opposite colours).
Vertex bishops_vertex(const BishopGame& game, Square a, Square b);

// ---------------------------------------------------------------------------
// Opposing kings

/// A king position on a board with squares numbered row-major from 1. At
/// least one piece is present.
struct KingPosition {
  std::optional<int> king;
  std::optional<int> opposing_king;

  /// "K3k2", "K3" or "k2".
  std::string label() const;
  friend auto operator<=>(const KingPosition&, const KingPosition&) = default;
};

/// Every one- and two-king position on a rows x cols board (rows 1 or 2).
/// Either king steps to an adjacent empty square or captures the other king.
GameGraph kings_graph(int rows, int cols);

// ---------------------------------------------------------------------------
// Fox and geese

/// Position on an x-by-y board using only (row + col) even squares, 1-indexed
/// with row 1 at the top.
struct FoxGeesePosition {
  Square fox;
  std::vector<Square> geese;  // sorted

  /// "F(r,c)|G{(r,c),(r,c)}".
  std::string label() const;
  friend auto operator<=>(const FoxGeesePosition&, const FoxGeesePosition&) = default;
};

struct FoxGeeseBoard {
  int rows = 0;
  int cols = 0;
  std::vector<Square> usable_squares;

  std::size_t usable_count() const { return usable_squares.size(); }
  /// One goose per two rows, rounded up.
  std::size_t geese_count() const { return static_cast<std::size_t>((rows + 1) / 2); }
  /// usable * C(usable - 1, geese).
  std::uint64_t expected_order() const;
};

FoxGeeseBoard fox_geese_board(int rows, int cols);

/// Full enumeration. The fox steps diagonally in any direction, a goose
/// steps diagonally down one row; both only onto empty usable squares.
GameGraph fox_geese_graph(int rows, int cols);

}  // namespace gamedim
