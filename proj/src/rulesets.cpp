#include "gamedim/rulesets.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>

#include "gamedim/errors.hpp"

namespace gamedim {

// ---------------------------------------------------------------------------
// Heap games

HeapPosition::HeapPosition(std::vector<std::int64_t> heaps) {
  for (std::int64_t h : heaps) {
    if (h < 0) throw ArgumentError("heap sizes must be nonnegative");
    if (h > std::int64_t{UINT32_MAX}) throw ArgumentError("heap size too large");
    if (h > 0) heaps_.push_back(static_cast<std::uint32_t>(h));
  }
  std::sort(heaps_.begin(), heaps_.end());
}

HeapPosition HeapPosition::with_heap(std::size_t index, std::uint32_t new_size) const {
  HeapPosition next = *this;
  if (new_size == 0) {
    next.heaps_.erase(next.heaps_.begin() + static_cast<std::ptrdiff_t>(index));
  } else {
    next.heaps_[index] = new_size;
    std::sort(next.heaps_.begin(), next.heaps_.end());
  }
  return next;
}

std::string HeapPosition::label() const {
  if (heaps_.empty()) return "0";
  std::string out = "(";
  for (std::size_t i = 0; i < heaps_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(heaps_[i]);
  }
  return out + ")";
}

HeapPosition HeapPosition::parse(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact == "0") return {};
  if (compact.size() < 3 || compact.front() != '(' || compact.back() != ')') {
    throw FormatError("bad heap label '" + std::string(text) + "'");
  }
  std::vector<std::int64_t> heaps;
  const std::string_view body(compact.data() + 1, compact.size() - 2);
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const std::size_t comma = std::min(body.find(',', pos), body.size());
    const std::string_view item = body.substr(pos, comma - pos);
    std::int64_t value = 0;
    auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || end != item.data() + item.size() || value <= 0) {
      throw FormatError("bad heap label '" + std::string(text) + "'");
    }
    heaps.push_back(value);
    pos = comma + 1;
  }
  return HeapPosition(std::move(heaps));
}

HeapPosition gcd_normalize(const HeapPosition& position) {
  std::uint32_t g = 0;
  for (std::uint32_t h : position.heaps()) g = std::gcd(g, h);
  if (g <= 1) return position;
  std::vector<std::int64_t> scaled;
  for (std::uint32_t h : position.heaps()) scaled.push_back(h / g);
  return HeapPosition(std::move(scaled));
}

namespace {

/// Applies every subtraction from `amounts(position)` to each distinct heap.
template <class AmountFn>
std::vector<HeapPosition> subtraction_moves(const HeapPosition& p, AmountFn&& amounts) {
  std::vector<HeapPosition> result;
  const auto& heaps = p.heaps();
  for (std::size_t i = 0; i < heaps.size(); ++i) {
    if (i > 0 && heaps[i] == heaps[i - 1]) continue;
    for (std::uint32_t s : amounts(heaps[i])) {
      if (s >= 1 && s <= heaps[i]) result.push_back(p.with_heap(i, heaps[i] - s));
    }
  }
  return result;
}

void require_heaps(const HeapPosition& start) {
  if (start.empty()) throw ArgumentError("start position needs at least one heap");
}

}  // namespace

GameGraph nim_graph(const HeapPosition& start) {
  require_heaps(start);
  return build_reachable(
      "nim", start,
      [](const HeapPosition& p) {
        return subtraction_moves(p, [](std::uint32_t h) {
          std::vector<std::uint32_t> all(h);
          std::iota(all.begin(), all.end(), 1u);
          return all;
        });
      },
      [](const HeapPosition& p) { return p.label(); });
}

GameGraph hats_graph(const HeapPosition& start) {
  require_heaps(start);
  return build_reachable(
      "hats-nim", start,
      [](const HeapPosition& p) {
        std::vector<std::uint32_t> current = p.heaps();
        current.erase(std::unique(current.begin(), current.end()), current.end());
        return subtraction_moves(p, [&](std::uint32_t) { return current; });
      },
      [](const HeapPosition& p) { return p.label(); });
}

// ---------------------------------------------------------------------------
// Bishops

namespace {

std::string square_label(Square s) {
  return "(" + std::to_string(s.row) + "," + std::to_string(s.col) + ")";
}

/// Undirected bishop moves among `squares`: any distance along a diagonal.
Digraph bishop_moves(const std::vector<Square>& squares, int rows, int cols) {
  std::map<Square, Vertex> index;
  for (std::size_t i = 0; i < squares.size(); ++i) index.emplace(squares[i], static_cast<Vertex>(i));
  std::vector<Arc> edges;
  for (std::size_t i = 0; i < squares.size(); ++i) {
    for (int dr : {-1, 1}) {
      for (int dc : {-1, 1}) {
        Square t{squares[i].row + dr, squares[i].col + dc};
        while (t.row >= 0 && t.row < rows && t.col >= 0 && t.col < cols) {
          if (auto it = index.find(t); it != index.end()) {
            edges.emplace_back(static_cast<Vertex>(i), it->second);
          }
          t.row += dr;
          t.col += dc;
        }
      }
    }
  }
  return Digraph::undirected(squares.size(), edges);
}

void require_board(int rows, int cols) {
  if (rows < 1 || cols < 1) throw ArgumentError("board dimensions must be positive");
}

}  // namespace

Digraph bishop_board_graph(int rows, int cols) {
  require_board(rows, cols);
  std::vector<Square> squares;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) squares.push_back({r, c});
  }
  return bishop_moves(squares, rows, cols);
}

BishopBoards bishop_boards(int rows, int cols) {
  require_board(rows, cols);
  BishopBoards boards;
  boards.rows = rows;
  boards.cols = cols;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      ((r + c) % 2 == 0 ? boards.dark_squares : boards.light_squares).push_back({r, c});
    }
  }
  if (boards.dark_squares.empty() || boards.light_squares.empty()) {
    throw ArgumentError("board has an empty colour class");
  }
  boards.dark_component = bishop_moves(boards.dark_squares, rows, cols);
  boards.light_component = bishop_moves(boards.light_squares, rows, cols);
  return boards;
}

BishopGame bishops_game_graph(int rows, int cols) {
  BishopGame result{{}, bishop_boards(rows, cols)};
  const BishopBoards& b = result.boards;
  result.game.graph = cartesian_product(b.dark_component, b.light_component);
  for (Square d : b.dark_squares) {
    for (Square l : b.light_squares) {
      result.game.labels.push_back("D" + square_label(d) + "L" + square_label(l));
    }
  }
  result.game.ruleset_name = "bishops";
  return result;
}

Vertex bishops_vertex(const BishopGame& game, Square a, Square b) {
  if ((a.row + a.col) % 2 != 0) std::swap(a, b);
  const auto& dark = game.boards.dark_squares;
  const auto& light = game.boards.light_squares;
  auto d = std::find(dark.begin(), dark.end(), a);
  auto l = std::find(light.begin(), light.end(), b);
  if (d == dark.end() || l == light.end()) {
    throw ArgumentError("bishops must stand on opposite-coloured squares of the board");
  }
  return static_cast<Vertex>((d - dark.begin()) * static_cast<std::ptrdiff_t>(light.size()) +
                             (l - light.begin()));
}

// ---------------------------------------------------------------------------
// Kings

std::string KingPosition::label() const {
  std::string out;
  if (king) out += "K" + std::to_string(*king);
  if (opposing_king) out += "k" + std::to_string(*opposing_king);
  return out;
}

GameGraph kings_graph(int rows, int cols) {
  if (rows != 1 && rows != 2) throw ArgumentError("king boards must have 1 or 2 rows");
  if (cols < 1 || rows * cols < 2) throw ArgumentError("king boards need at least two squares");
  const int squares = rows * cols;

  // Squares are numbered row-major from 1.
  auto neighbours = [&](int sq) {
    std::vector<int> out;
    const int r = (sq - 1) / cols;
    const int c = (sq - 1) % cols;
    for (int dr = -1; dr <= 1; ++dr) {
      for (int dc = -1; dc <= 1; ++dc) {
        const int nr = r + dr;
        const int nc = c + dc;
        if ((dr != 0 || dc != 0) && nr >= 0 && nr < rows && nc >= 0 && nc < cols) {
          out.push_back(nr * cols + nc + 1);
        }
      }
    }
    return out;
  };

  std::vector<KingPosition> positions;
  for (int i = 1; i <= squares; ++i) {
    for (int j = 1; j <= squares; ++j) {
      if (i != j) positions.push_back({i, j});
    }
  }
  for (int i = 1; i <= squares; ++i) positions.push_back({i, std::nullopt});
  for (int j = 1; j <= squares; ++j) positions.push_back({std::nullopt, j});

  auto moves = [&](const KingPosition& p) {
    std::vector<KingPosition> out;
    if (p.king) {
      for (int t : neighbours(*p.king)) {
        out.push_back(t == p.opposing_king ? KingPosition{t, std::nullopt}
                                           : KingPosition{t, p.opposing_king});
      }
    }
    if (p.opposing_king) {
      for (int t : neighbours(*p.opposing_king)) {
        out.push_back(t == p.king ? KingPosition{std::nullopt, t} : KingPosition{p.king, t});
      }
    }
    return out;
  };
  return build_enumerated("kings", positions, moves, [](const KingPosition& p) { return p.label(); });
}

// ---------------------------------------------------------------------------
// Fox and geese

std::string FoxGeesePosition::label() const {
  auto sq = [](Square s) { return "(" + std::to_string(s.row) + "," + std::to_string(s.col) + ")"; };
  std::string out = "F" + sq(fox) + "|G{";
  for (std::size_t i = 0; i < geese.size(); ++i) {
    if (i > 0) out += ',';
    out += sq(geese[i]);
  }
  return out + "}";
}

std::uint64_t FoxGeeseBoard::expected_order() const {
  const std::uint64_t s = usable_count();
  const std::uint64_t g = geese_count();
  if (s == 0 || g > s - 1) return 0;
  std::uint64_t binom = 1;
  for (std::uint64_t i = 1; i <= g; ++i) binom = binom * (s - 1 - g + i) / i;
  return s * binom;
}

FoxGeeseBoard fox_geese_board(int rows, int cols) {
  if (rows < 2 || cols < 2) throw ArgumentError("fox and geese needs at least a 2x2 board");
  FoxGeeseBoard board{rows, cols, {}};
  for (int r = 1; r <= rows; ++r) {
    for (int c = 1; c <= cols; ++c) {
      if ((r + c) % 2 == 0) board.usable_squares.push_back({r, c});
    }
  }
  return board;
}

GameGraph fox_geese_graph(int rows, int cols) {
  const FoxGeeseBoard board = fox_geese_board(rows, cols);
  const auto& usable = board.usable_squares;
  const std::size_t g = board.geese_count();
  if (g + 1 > usable.size()) throw ArgumentError("board too small for the geese");
  const std::set<Square> usable_set(usable.begin(), usable.end());

  std::vector<FoxGeesePosition> positions;
  for (const Square fox : usable) {
    std::vector<Square> rest;
    for (const Square s : usable) {
      if (s != fox) rest.push_back(s);
    }
    // Lexicographic g-combinations of `rest`.
    std::vector<std::size_t> pick(g);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    while (true) {
      FoxGeesePosition p{fox, {}};
      for (std::size_t i : pick) p.geese.push_back(rest[i]);
      positions.push_back(std::move(p));
      std::size_t i = g;
      while (i > 0 && pick[i - 1] == rest.size() - g + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < g; ++j) pick[j] = pick[j - 1] + 1;
    }
  }

  auto moves = [&](const FoxGeesePosition& p) {
    auto empty = [&](Square s) {
      return usable_set.count(s) != 0 && s != p.fox &&
             std::find(p.geese.begin(), p.geese.end(), s) == p.geese.end();
    };
    std::vector<FoxGeesePosition> out;
    for (int dr : {-1, 1}) {
      for (int dc : {-1, 1}) {
        const Square t{p.fox.row + dr, p.fox.col + dc};
        if (empty(t)) out.push_back({t, p.geese});
      }
    }
    for (std::size_t i = 0; i < p.geese.size(); ++i) {
      for (int dc : {-1, 1}) {
        const Square t{p.geese[i].row + 1, p.geese[i].col + dc};
        if (!empty(t)) continue;
        FoxGeesePosition next = p;
        next.geese[i] = t;
        std::sort(next.geese.begin(), next.geese.end());
        out.push_back(std::move(next));
      }
    }
    return out;
  };
  return build_enumerated("fox-geese", positions, moves,
                          [](const FoxGeesePosition& p) { return p.label(); });
}

}  // namespace gamedim
