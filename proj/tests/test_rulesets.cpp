#include <set>

#include "doctest.h"
#include "gamedim/errors.hpp"
#include "gamedim/rulesets.hpp"

using namespace gamedim;

namespace {

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

ExtendedDistance d(int v) { return ExtendedDistance(v); }

}  // namespace

TEST_CASE("heap positions") {
  const HeapPosition p({3, 0, 1});
  CHECK(p.heaps() == std::vector<std::uint32_t>{1, 3});
  CHECK(p.label() == "(1,3)");
  CHECK(HeapPosition().label() == "0");
  CHECK(HeapPosition::parse(" ( 3 , 1 ) ") == p);
  CHECK(HeapPosition::parse("0").empty());
  CHECK_THROWS_AS(HeapPosition::parse("(1,x)"), FormatError);
  CHECK_THROWS_AS(HeapPosition({-1}), ArgumentError);
  CHECK(p.with_heap(1, 0).label() == "(1)");
  CHECK(gcd_normalize(HeapPosition({4, 6})).label() == "(2,3)");
}

TEST_CASE("nim graph orders and sizes") {
  for (int n = 1; n <= 8; ++n) {
    const GameGraph g = nim_graph(HeapPosition({n}));
    CHECK(g.graph.order() == static_cast<std::size_t>(n + 1));
    CHECK(g.graph.arc_count() == choose(n + 1, 2));
    CHECK(g.labels.front() == "(" + std::to_string(n) + ")");
  }
  for (int n = 1; n <= 5; ++n) {
    const GameGraph g = nim_graph(HeapPosition({n, n}));
    CHECK(g.graph.order() == static_cast<std::size_t>((n * n + 3 * n + 2) / 2));
    // From (a,b): a + b moves, collapsing to b when a == b.
    std::uint64_t arcs = 0;
    for (int a = 0; a <= n; ++a) {
      for (int b = a; b <= n; ++b) arcs += a == b ? b : a + b;
    }
    CHECK(g.graph.arc_count() == arcs);
  }
}

TEST_CASE("hats moves and distances") {
  const GameGraph g = hats_graph(HeapPosition({1, 2}));
  // (1,2) -> (2) [take 1 from 1], (1,1) [take 1 from 2], (1) [take 2 from 2].
  std::set<std::string> from_start;
  for (Vertex v : g.graph.out_neighbors(g.vertex("(1,2)"))) from_start.insert(g.labels[v]);
  CHECK(from_start == std::set<std::string>{"(1)", "(1,1)", "(2)"});
  CHECK(g.graph.out_neighbors(g.vertex("(2)")).size() == 1);

  const auto m = signed_distance_matrix(g.graph);
  CHECK(m.at(g.vertex("(1,2)"), g.vertex("(1)")) == d(1));
  CHECK(m.at(g.vertex("(1,2)"), g.vertex("0")) == d(2));
  CHECK(m.at(g.vertex("0"), g.vertex("(1)")) == d(-1));
  CHECK(m.at(g.vertex("(2)"), g.vertex("(1,1)")).is_infinite());
}

TEST_CASE("king strips") {
  CHECK(kings_graph(1, 2).graph.order() == 6);
  CHECK(kings_graph(1, 3).graph.order() == 12);
  CHECK(kings_graph(1, 4).graph.order() == 20);
  for (int n = 2; n <= 6; ++n) {
    CHECK(kings_graph(1, n).graph.order() == static_cast<std::size_t>(n * (n - 1) + 2 * n));
    CHECK(kings_graph(2, n).graph.order() ==
          static_cast<std::size_t>(2 * n * (2 * n - 1) + 4 * n));
  }
  const GameGraph g = kings_graph(1, 3);
  // K2k3: K steps to 1 or captures on 3; k captures on 2.
  std::set<std::string> next;
  for (Vertex v : g.graph.out_neighbors(g.vertex("K2k3"))) next.insert(g.labels[v]);
  CHECK(next == std::set<std::string>{"K1k3", "K3", "k2"});
  CHECK(g.graph.out_neighbors(g.vertex("K2")).size() == 2);
  CHECK(KingPosition{1, std::nullopt}.label() == "K1");
  CHECK_THROWS_AS(kings_graph(3, 3), ArgumentError);
}

TEST_CASE("bishops") {
  for (int rows : {2, 3}) {
    for (int cols = rows; cols <= 5; ++cols) {
      const BishopGame b = bishops_game_graph(rows, cols);
      const std::size_t cells = static_cast<std::size_t>(rows * cols);
      CHECK(b.boards.dark_squares.size() == (cells + 1) / 2);
      CHECK(b.boards.light_squares.size() == cells / 2);
      CHECK(b.game.graph.order() == ((cells + 1) / 2) * (cells / 2));
      CHECK_FALSE(b.game.graph.is_directed());
    }
  }
  const BishopGame b = bishops_game_graph(3, 3);
  CHECK(bishops_vertex(b, {0, 0}, {0, 1}) == bishops_vertex(b, {0, 1}, {0, 0}));
  CHECK(b.game.labels[bishops_vertex(b, {0, 1}, {0, 0})] == "D(0,0)L(0,1)");
  CHECK_THROWS_AS(bishops_vertex(b, {0, 0}, {1, 1}), ArgumentError);
  // Dark 3x3: centre to four corners plus the two long diagonals; light is a 4-cycle.
  CHECK(b.boards.dark_component.stats().size == 6);
  CHECK(b.boards.light_component.stats().size == 4);
}

TEST_CASE("fox and geese") {
  const GameGraph g = fox_geese_graph(3, 3);
  CHECK(g.graph.stats() == GraphStats{30, 48});
  for (int rows = 2; rows <= 4; ++rows) {
    for (int cols = 2; cols <= 4; ++cols) {
      const FoxGeeseBoard board = fox_geese_board(rows, cols);
      const std::size_t s = board.usable_count();
      const std::size_t geese = (static_cast<std::size_t>(rows) + 1) / 2;
      CHECK(board.geese_count() == geese);
      CHECK(board.expected_order() == s * choose(s - 1, geese));
      CHECK(fox_geese_graph(rows, cols).graph.order() == board.expected_order());
    }
  }
  const FoxGeesePosition p{{1, 3}, {{1, 1}, {2, 2}}};
  CHECK(p.label() == "F(1,3)|G{(1,1),(2,2)}");
  // Geese only move down, so a goose on the last row has no move.
  const Vertex stuck = g.vertex("F(1,1)|G{(3,1),(3,3)}");
  for (Vertex v : g.graph.out_neighbors(stuck)) CHECK(g.labels[v].rfind("F(2,2)", 0) == 0);
  CHECK_THROWS_AS(fox_geese_board(1, 3), ArgumentError);
}
