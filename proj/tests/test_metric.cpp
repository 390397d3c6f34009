#include <random>

#include "doctest.h"
#include "gamedim/errors.hpp"
#include "gamedim/metric.hpp"
#include "gamedim/rulesets.hpp"
#include "oracles.hpp"

using namespace gamedim;

namespace {

using Pairs = std::vector<std::pair<int, int>>;

std::vector<Arc> to_arcs(const Pairs& pairs) {
  std::vector<Arc> arcs;
  for (auto [u, v] : pairs) arcs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return arcs;
}

std::vector<int> to_ints(const LandmarkSet& s) { return {s.begin(), s.end()}; }

Pairs cycle_edges(int n) {
  Pairs edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return edges;
}

Pairs path_edges(int n) {
  Pairs edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return edges;
}

/// Symmetric closure for the oracle, which takes directed arcs.
Pairs both_ways(const Pairs& edges) {
  Pairs out = edges;
  for (auto [u, v] : edges) out.emplace_back(v, u);
  return out;
}

SignedDistanceMatrix undirected_matrix(int n, const Pairs& edges) {
  return signed_distance_matrix(Digraph::undirected(static_cast<std::size_t>(n), to_arcs(edges)));
}

}  // namespace

TEST_CASE("landmark sets reject duplicates and out-of-range ids") {
  CHECK_THROWS_AS(LandmarkSet({1, 1}), ArgumentError);
  const LandmarkSet s({0, 4});
  CHECK_NOTHROW(s.validate(5));
  CHECK_THROWS_AS(s.validate(4), ArgumentError);
}

TEST_CASE("distance vectors and resolving check on *4") {
  const GameGraph g = nim_graph(HeapPosition({4}));
  const auto m = signed_distance_matrix(g.graph);
  const LandmarkSet single({g.vertex("(1)")});
  const ResolveCheck check = is_resolving(m, single);
  CHECK_FALSE(check.resolving);
  REQUIRE(check.ambiguous);
  const auto [a, b] = *check.ambiguous;
  CHECK(distance_vector(m, single, a) == distance_vector(m, single, b));

  const MetricResult r = metric_dimension_exact(m);
  CHECK(r.beta == 2);
  CHECK(is_resolving(m, r.basis).resolving);
}

TEST_CASE("exact metric dimension matches all-subset enumeration") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Pairs arcs = oracle::random_digraph(rng, n, 0.3);
    const auto m = signed_distance_matrix(Digraph::directed(static_cast<std::size_t>(n), to_arcs(arcs)));
    const auto reference = oracle::signed_distances(n, arcs);
    const int expected = oracle::metric_dimension(reference);

    const MetricResult exact = metric_dimension_exact(m);
    CHECK(exact.beta == static_cast<std::size_t>(expected));
    CHECK(exact.basis.size() == exact.beta);
    CHECK(oracle::resolves(reference, to_ints(exact.basis)));

    MetricOptions threaded;
    threaded.jobs = 3;
    CHECK(metric_dimension_exact(m, threaded).basis == exact.basis);

    const LandmarkSet greedy = metric_dimension_greedy(m);
    CHECK(oracle::resolves(reference, to_ints(greedy)));
    CHECK(greedy.size() >= exact.beta);

    // Monotonicity: any superset of a resolving set still resolves.
    for (Vertex extra = 0; extra < static_cast<Vertex>(n); ++extra) {
      std::vector<Vertex> bigger = exact.basis.vertices();
      if (std::find(bigger.begin(), bigger.end(), extra) != bigger.end()) continue;
      bigger.push_back(extra);
      CHECK(is_resolving(m, LandmarkSet(bigger)).resolving);
    }
  }
}

TEST_CASE("enumerate_all lists every basis in lexicographic order") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Pairs arcs = oracle::random_digraph(rng, n, 0.35);
    const auto m = signed_distance_matrix(Digraph::directed(static_cast<std::size_t>(n), to_arcs(arcs)));
    const auto reference = oracle::signed_distances(n, arcs);

    MetricOptions options;
    options.enumerate_all = true;
    const MetricResult r = metric_dimension_exact(m, options);
    REQUIRE(r.all_bases);

    std::vector<std::vector<int>> expected;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      const auto set = oracle::members(mask);
      if (set.size() == r.beta && oracle::resolves(reference, set)) expected.push_back(set);
    }
    std::sort(expected.begin(), expected.end());
    std::vector<std::vector<int>> got;
    for (const auto& s : *r.all_bases) got.push_back(to_ints(s));
    CHECK(got == expected);
    CHECK(to_ints(r.basis) == expected.front());
  }
}

TEST_CASE("bound exceeded carries the heuristic bound") {
  const GameGraph g = nim_graph(HeapPosition({6}));
  const auto m = signed_distance_matrix(g.graph);
  MetricOptions options;
  options.max_k = 2;
  try {
    metric_dimension_exact(m, options);
    FAIL("expected BoundExceeded");
  } catch (const BoundExceeded& e) {
    CHECK(e.max_k() == 2);
    CHECK(e.heuristic_upper_bound() >= 3);
  }
}

TEST_CASE("trivial orders") {
  CHECK_THROWS_AS(metric_dimension_exact(signed_distance_matrix(Digraph::directed(0, {}))), ArgumentError);
  const MetricResult one = metric_dimension_exact(signed_distance_matrix(Digraph::directed(1, {})));
  CHECK(one.beta == 0);
  CHECK(one.basis.empty());
}

TEST_CASE("doubly resolving sets on paths and cycles") {
  for (int n = 2; n <= 7; ++n) {
    const auto m = undirected_matrix(n, path_edges(n));
    const DoubleResolveResult r = min_doubly_resolving(m);
    CHECK(r.psi == 2);
    CHECK(is_doubly_resolving(m, r.witness));
  }
  const auto c4 = undirected_matrix(4, cycle_edges(4));
  CHECK(min_doubly_resolving(c4).psi == 3);
  CHECK(oracle::min_doubly_resolving(oracle::floyd_warshall(4, both_ways(cycle_edges(4)))) == 3);
}

TEST_CASE("doubly resolving domain errors") {
  const auto c4 = undirected_matrix(4, cycle_edges(4));
  CHECK_THROWS_AS(is_doubly_resolving(c4, LandmarkSet({0})), DomainError);
  const std::vector<Arc> arc = {{0, 1}};
  const auto directed = signed_distance_matrix(Digraph::directed(2, arc));
  CHECK_THROWS_AS(is_doubly_resolving(directed, LandmarkSet({0, 1})), DomainError);
  const auto split = signed_distance_matrix(Digraph::undirected(3, arc));
  CHECK_THROWS_AS(min_doubly_resolving(split), DomainError);
}

TEST_CASE("doubly resolving agrees with the pairwise definition") {
  std::mt19937 rng(555);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const Pairs edges = oracle::random_connected_graph(rng, n, 0.2);
    const auto m = undirected_matrix(n, edges);
    const auto plain = oracle::floyd_warshall(n, both_ways(edges));

    const DoubleResolveResult r = min_doubly_resolving(m);
    CHECK(r.psi == static_cast<std::size_t>(oracle::min_doubly_resolving(plain)));
    CHECK(oracle::doubly_resolves(plain, to_ints(r.witness)));
    CHECK(oracle::resolves(oracle::signed_distances(n, both_ways(edges)), to_ints(r.witness)));
    CHECK(metric_dimension_exact(m).beta <= r.psi);

    for (std::uint32_t mask = 0; mask < (1u << n); mask += 1 + rng() % 5) {
      const auto set = oracle::members(mask);
      if (set.size() < 2) continue;
      const LandmarkSet s(std::vector<Vertex>(set.begin(), set.end()));
      CHECK(is_doubly_resolving(m, s) == oracle::doubly_resolves(plain, set));
    }
  }
}
