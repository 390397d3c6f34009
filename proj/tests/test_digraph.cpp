#include <random>

#include "doctest.h"
#include "gamedim/digraph.hpp"
#include "gamedim/errors.hpp"
#include "gamedim/rulesets.hpp"
#include "oracles.hpp"

using namespace gamedim;

namespace {

ExtendedDistance d(int v) { return ExtendedDistance(v); }

Digraph path_graph(std::size_t n) {
  std::vector<Arc> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Digraph::undirected(n, edges);
}

std::vector<Arc> to_arcs(const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Arc> arcs;
  for (auto [u, v] : pairs) arcs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return arcs;
}

}  // namespace

TEST_CASE("digraph construction") {
  const std::vector<Arc> arcs = {{0, 1}, {1, 2}, {0, 1}};
  const Digraph g = Digraph::directed(3, arcs);
  CHECK(g.arc_count() == 2);
  CHECK(g.stats() == GraphStats{3, 2});
  CHECK(g.has_arc(0, 1));
  CHECK_FALSE(g.has_arc(1, 0));
  CHECK(g.in_neighbors(2).size() == 1);

  const Digraph u = Digraph::undirected(3, arcs);
  CHECK(u.arc_count() == 4);
  CHECK(u.stats().size == 2);
  CHECK(u.has_arc(1, 0));
  CHECK(u.edges() == std::vector<Arc>{{0, 1}, {1, 2}});

  const std::vector<Arc> loop = {{1, 1}};
  CHECK_THROWS_AS(Digraph::directed(2, loop), ArgumentError);
  const std::vector<Arc> out_of_range = {{0, 5}};
  CHECK_THROWS_AS(Digraph::directed(2, out_of_range), ArgumentError);
}

TEST_CASE("bfs distances") {
  const std::vector<Arc> arcs = {{0, 1}, {1, 2}};
  const Digraph path = Digraph::directed(3, arcs);
  CHECK(bfs_distances(path, 0) == std::vector{d(0), d(1), d(2)});
  CHECK_THROWS_AS(bfs_distances(path, 3), ArgumentError);

  // *3: vertex 0 is the start (3), the sink is the empty position.
  const GameGraph star3 = nim_graph(HeapPosition({3}));
  const auto from_top = bfs_distances(star3.graph, star3.vertex("(3)"));
  for (const char* label : {"(2)", "(1)", "0"}) CHECK(from_top[star3.vertex(label)] == d(1));

  const auto from_sink = bfs_distances(star3.graph, star3.vertex("0"));
  for (Vertex v = 0; v < 4; ++v) {
    CHECK(from_sink[v] == (v == star3.vertex("0") ? d(0) : kInfinity));
  }
}

TEST_CASE("signed distance basic cases") {
  const std::vector<Arc> arc = {{0, 1}};
  const auto m = signed_distance_matrix(Digraph::directed(2, arc));
  CHECK(m.at(0, 1) == d(1));
  CHECK(m.at(1, 0) == d(-1));
  CHECK(m.at(0, 0) == d(0));

  const auto apart = signed_distance_matrix(Digraph::directed(2, {}));
  CHECK(apart.at(0, 1).is_infinite());
  CHECK(apart.at(1, 0).is_infinite());

  // Two-cycle: equal distances both ways stay positive.
  const std::vector<Arc> cycle = {{0, 1}, {1, 0}};
  const auto both = signed_distance_matrix(Digraph::directed(2, cycle));
  CHECK(both.at(0, 1) == d(1));
  CHECK(both.at(1, 0) == d(1));
}

TEST_CASE("signed distance on the 1x3 king strip") {
  const GameGraph strip = kings_graph(1, 3);
  const auto m = signed_distance_matrix(strip.graph);
  CHECK(m.at(strip.vertex("K1"), strip.vertex("K1k2")) == d(-2));
  CHECK(m.at(strip.vertex("k3"), strip.vertex("K3k2")) == d(-1));
}

TEST_CASE("signed distance invariants on random digraphs") {
  std::mt19937 rng(20241016);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const auto pairs = oracle::random_digraph(rng, n, 0.2);
    const Digraph g = Digraph::directed(static_cast<std::size_t>(n), to_arcs(pairs));
    const auto m = signed_distance_matrix(g);
    const auto reference = oracle::signed_distances(n, pairs);
    const auto plain = oracle::floyd_warshall(n, pairs);

    for (int u = 0; u < n; ++u) {
      CHECK(m.at(u, u) == d(0));
      for (int v = 0; v < n; ++v) {
        const ExtendedDistance e = m.at(u, v);
        const int r = reference[u][v];
        CHECK(e == (r == oracle::kInf ? kInfinity : d(r)));
        if (u == v) continue;
        const bool reachable = plain[u][v] != oracle::kInf || plain[v][u] != oracle::kInf;
        CHECK(e.is_infinite() == !reachable);
        if (!reachable) continue;
        CHECK(std::abs(e.value()) == std::min(plain[u][v], plain[v][u]));
        const ExtendedDistance back = m.at(v, u);
        if (plain[u][v] == plain[v][u]) {
          CHECK(e.value() > 0);
          CHECK(back.value() > 0);
        } else {
          CHECK((e.value() < 0) != (back.value() < 0));
          CHECK(e == -back);
        }
      }
    }

    // BFS witnesses: every finite distance is realised by a walk of that length.
    for (Vertex s = 0; s < static_cast<Vertex>(n); ++s) {
      const auto dist = bfs_distances(g, s);
      for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
        if (dist[v].is_infinite() || v == s) continue;
        bool has_parent = false;
        for (Vertex p : g.in_neighbors(v)) {
          if (dist[p].is_finite() && dist[p].value() + 1 == dist[v].value()) has_parent = true;
        }
        CHECK(has_parent);
      }
    }
  }
}

TEST_CASE("parallel signed distances agree with serial") {
  const GameGraph fox = fox_geese_graph(3, 4);
  CHECK(signed_distance_matrix(fox.graph, 4) == signed_distance_matrix(fox.graph, 1));
}

TEST_CASE("cartesian product") {
  const Digraph p2 = path_graph(2);
  const Digraph c4 = cartesian_product(p2, p2);
  CHECK(c4.stats() == GraphStats{4, 4});
  for (Vertex v = 0; v < 4; ++v) CHECK(c4.out_neighbors(v).size() == 2);

  const std::vector<Arc> star_edges = {{0, 1}, {0, 2}, {0, 3}, {0, 4}};
  const Digraph star = Digraph::undirected(5, star_edges);
  const std::vector<Arc> cycle_edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  const Digraph cycle = Digraph::undirected(4, cycle_edges);
  const Digraph product = cartesian_product(star, cycle);
  CHECK(product.order() == 20);
  for (Vertex u = 0; u < 5; ++u) {
    for (Vertex v = 0; v < 4; ++v) {
      CHECK(product.out_neighbors(u * 4 + v).size() ==
            star.out_neighbors(u).size() + cycle.out_neighbors(v).size());
    }
  }

  for (std::size_t n = 1; n <= 5; ++n) {
    const Digraph grid = cartesian_product(p2, path_graph(n));
    CHECK(grid.order() == 2 * n);
    CHECK(grid.stats().size == (n - 1) * 2 + n);
  }

  const std::vector<Arc> arc = {{0, 1}};
  CHECK_THROWS_AS(cartesian_product(Digraph::directed(2, arc), p2), ArgumentError);
}

TEST_CASE("component and path analysis") {
  const GraphAnalysis board = analyze(bishop_board_graph(3, 3));
  REQUIRE(board.components.size() == 2);
  CHECK(board.components[0].size() == 5);
  CHECK(board.components[1].size() == 4);
  CHECK_FALSE(board.is_path[0]);
  CHECK_FALSE(board.is_path[1]);

  for (int n = 2; n <= 6; ++n) {
    const GraphAnalysis strip = analyze(bishop_board_graph(2, n));
    REQUIRE(strip.components.size() == 2);
    CHECK(strip.is_path[0]);
    CHECK(strip.is_path[1]);
  }

  const GraphAnalysis single = analyze(Digraph::undirected(1, {}));
  CHECK(single.components.size() == 1);
  CHECK(single.is_path[0]);

  const std::vector<Arc> cycle_edges = {{0, 1}, {1, 2}, {2, 0}};
  CHECK_FALSE(analyze(Digraph::undirected(3, cycle_edges)).is_path[0]);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const auto pairs = oracle::random_digraph(rng, n, 0.1);
    const Digraph g = Digraph::undirected(static_cast<std::size_t>(n), to_arcs(pairs));
    const GraphAnalysis a = analyze(g);
    std::size_t total = 0;
    for (std::size_t c = 0; c < a.components.size(); ++c) {
      total += a.components[c].size();
      if (!a.is_path[c]) continue;
      std::size_t degree_sum = 0;
      for (Vertex v : a.components[c]) degree_sum += g.out_neighbors(v).size();
      CHECK(degree_sum / 2 == a.components[c].size() - 1);
    }
    CHECK(total == static_cast<std::size_t>(n));
  }
}
