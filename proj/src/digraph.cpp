#include "gamedim/digraph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "gamedim/errors.hpp"
#include "parallel.hpp"

namespace gamedim {

Digraph::Digraph(std::size_t vertex_count, std::span<const Arc> arcs, bool directed)
    : directed_(directed), out_(vertex_count), in_(vertex_count) {
  auto add = [&](Vertex u, Vertex v) {
    out_[u].push_back(v);
    in_[v].push_back(u);
  };
  for (auto [u, v] : arcs) {
    if (u >= vertex_count || v >= vertex_count) {
      throw ArgumentError("arc (" + std::to_string(u) + "," + std::to_string(v) +
                          ") out of range for order " + std::to_string(vertex_count));
    }
    if (u == v) throw ArgumentError("self-loop at vertex " + std::to_string(u));
    add(u, v);
    if (!directed) add(v, u);
  }
  for (auto* lists : {&out_, &in_}) {
    for (auto& list : *lists) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
  }
  for (const auto& list : out_) arc_count_ += list.size();
}

Digraph Digraph::directed(std::size_t vertex_count, std::span<const Arc> arcs) {
  return Digraph(vertex_count, arcs, true);
}

Digraph Digraph::undirected(std::size_t vertex_count, std::span<const Arc> edges) {
  return Digraph(vertex_count, edges, false);
}

GraphStats Digraph::stats() const {
  return {order(), directed_ ? arc_count_ : arc_count_ / 2};
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  const auto& list = out_.at(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : out_[u]) result.emplace_back(u, v);
  }
  return result;
}

std::vector<Arc> Digraph::edges() const {
  if (directed_) return arcs();
  std::vector<Arc> result;
  result.reserve(arc_count_ / 2);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : out_[u]) {
      if (u < v) result.emplace_back(u, v);
    }
  }
  return result;
}

std::vector<ExtendedDistance> bfs_distances(const Digraph& g, Vertex source) {
  if (source >= g.order()) {
    throw ArgumentError("source " + std::to_string(source) + " out of range for order " +
                        std::to_string(g.order()));
  }
  std::vector<ExtendedDistance> dist(g.order(), kInfinity);
  std::deque<Vertex> queue{source};
  dist[source] = ExtendedDistance(0);
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    const auto next = ExtendedDistance(dist[u].value() + 1);
    for (Vertex v : g.out_neighbors(u)) {
      if (dist[v].is_infinite()) {
        dist[v] = next;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

SignedDistanceMatrix::SignedDistanceMatrix(std::size_t n, std::vector<ExtendedDistance> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n * n) throw ArgumentError("distance matrix must be n x n");
}

SignedDistanceMatrix signed_distance_matrix(const Digraph& g, unsigned jobs) {
  const std::size_t n = g.order();
  std::vector<std::vector<ExtendedDistance>> forward(n);
  detail::parallel_for(n, jobs, [&](std::size_t u) {
    forward[u] = bfs_distances(g, static_cast<Vertex>(u));
  });

  std::vector<ExtendedDistance> entries(n * n, ExtendedDistance(0));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v) continue;
      const ExtendedDistance there = forward[u][v];
      const ExtendedDistance back = forward[v][u];
      ExtendedDistance d = kInfinity;
      if (there.is_finite() && there <= back) {
        d = there;
      } else if (back.is_finite()) {
        d = -back;
      }
      entries[u * n + v] = d;
    }
  }
  return SignedDistanceMatrix(n, std::move(entries));
}

Digraph cartesian_product(const Digraph& g, const Digraph& h) {
  if (g.is_directed() || h.is_directed()) {
    throw ArgumentError("cartesian_product requires undirected graphs");
  }
  const auto nh = static_cast<Vertex>(h.order());
  std::vector<Arc> edges;
  edges.reserve(g.order() * h.arc_count() / 2 + h.order() * g.arc_count() / 2);
  for (Vertex u = 0; u < g.order(); ++u) {
    for (auto [v, w] : h.edges()) edges.emplace_back(u * nh + v, u * nh + w);
  }
  for (auto [u, w] : g.edges()) {
    for (Vertex v = 0; v < nh; ++v) edges.emplace_back(u * nh + v, w * nh + v);
  }
  return Digraph::undirected(g.order() * h.order(), edges);
}

GraphAnalysis analyze(const Digraph& g) {
  const std::size_t n = g.order();
  GraphAnalysis result;
  result.stats = g.stats();

  // Underlying simple graph: neighbours in either direction.
  std::vector<std::vector<Vertex>> nbrs(n);
  for (Vertex u = 0; u < n; ++u) {
    auto& list = nbrs[u];
    list.assign(g.out_neighbors(u).begin(), g.out_neighbors(u).end());
    list.insert(list.end(), g.in_neighbors(u).begin(), g.in_neighbors(u).end());
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }

  std::vector<bool> seen(n, false);
  for (Vertex start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> comp{start};
    seen[start] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex v : nbrs[comp[i]]) {
        if (!seen[v]) {
          seen[v] = true;
          comp.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());

    std::size_t degree_sum = 0;
    std::size_t leaves = 0;
    bool degrees_ok = true;
    for (Vertex v : comp) {
      const std::size_t deg = nbrs[v].size();
      degree_sum += deg;
      if (deg == 1) ++leaves;
      if (deg > 2) degrees_ok = false;
    }
    // Connected with |E| = |V| - 1 and max degree 2 is exactly a path.
    const std::size_t edge_count = degree_sum / 2;
    const bool path = degrees_ok && edge_count + 1 == comp.size() && leaves <= 2;
    result.components.push_back(std::move(comp));
    result.is_path.push_back(path);
  }
  return result;
}

}  // namespace gamedim
