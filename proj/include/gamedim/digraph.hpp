#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gamedim/distance.hpp"

namespace gamedim {

using Vertex = std::uint32_t;
using Arc = std::pair<Vertex, Vertex>;

struct GraphStats {
  std::size_t order = 0;
  /// Arc count for directed graphs, edge count for undirected ones.
  std::size_t size = 0;

  friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

/// Immutable directed graph on vertices 0..order()-1.
///
/// Undirected graphs are stored as symmetric digraphs with the `directed`
/// flag cleared. Both out- and in-adjacency lists are kept sorted so reverse
/// traversals need no transposition.
class Digraph {
 public:
  Digraph() = default;

  /// Builds a directed graph. Duplicate arcs are merged; self-loops and
  /// out-of-range endpoints raise ArgumentError.
  static Digraph directed(std::size_t vertex_count, std::span<const Arc> arcs);

  /// Builds an undirected graph; each pair may be given in either or both
  /// orientations.
  static Digraph undirected(std::size_t vertex_count, std::span<const Arc> edges);

  std::size_t order() const { return out_.size(); }
  std::size_t arc_count() const { return arc_count_; }
  bool is_directed() const { return directed_; }
  GraphStats stats() const;

  std::span<const Vertex> out_neighbors(Vertex v) const { return out_.at(v); }
  std::span<const Vertex> in_neighbors(Vertex v) const { return in_.at(v); }
  bool has_arc(Vertex u, Vertex v) const;

  /// All arcs in (source, target) lexicographic order.
  std::vector<Arc> arcs() const;
  /// Undirected graphs: each edge once with u < v. Directed graphs: arcs().
  std::vector<Arc> edges() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  Digraph(std::size_t vertex_count, std::span<const Arc> arcs, bool directed);

  bool directed_ = true;
  std::size_t arc_count_ = 0;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

/// Shortest directed path lengths from `source`; infinity where unreachable.
std::vector<ExtendedDistance> bfs_distances(const Digraph& g, Vertex source);

/// All-pairs signed distances.
///
/// entry(u, v) is d(u,v) when a u->v path exists and is no longer than the
/// reverse path, -d(v,u) when only the reverse path exists or it is strictly
/// shorter, and infinity when neither exists. entry(u, u) = 0.
class SignedDistanceMatrix {
 public:
  SignedDistanceMatrix() = default;
  SignedDistanceMatrix(std::size_t n, std::vector<ExtendedDistance> entries);

  std::size_t order() const { return n_; }
  ExtendedDistance at(Vertex u, Vertex v) const { return entries_[std::size_t{u} * n_ + v]; }
  std::span<const ExtendedDistance> row(Vertex u) const {
    return {entries_.data() + std::size_t{u} * n_, n_};
  }

  friend bool operator==(const SignedDistanceMatrix&, const SignedDistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<ExtendedDistance> entries_;
};

/// Runs one BFS per source; `jobs` > 1 spreads sources across threads.
SignedDistanceMatrix signed_distance_matrix(const Digraph& g, unsigned jobs = 1);

/// Cartesian product of two undirected graphs; vertex (u, v) has index
/// u * h.order() + v.
Digraph cartesian_product(const Digraph& g, const Digraph& h);

struct GraphAnalysis {
  /// Connected components of the underlying undirected graph, each sorted,
  /// listed in order of their smallest vertex.
  std::vector<std::vector<Vertex>> components;
  std::vector<bool> is_path;
  GraphStats stats;
};

GraphAnalysis analyze(const Digraph& g);

}  // namespace gamedim
