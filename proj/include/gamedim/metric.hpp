#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gamedim/digraph.hpp"

namespace gamedim {

/// Ordered set of distinct landmark vertices.
class LandmarkSet {
 public:
  LandmarkSet() = default;
  /// Throws ArgumentError on duplicates.
  explicit LandmarkSet(std::vector<Vertex> vertices);

  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }

  /// Throws ArgumentError unless every id is below `order`.
  void validate(std::size_t order) const;

  friend bool operator==(const LandmarkSet&, const LandmarkSet&) = default;

 private:
  std::vector<Vertex> vertices_;
};

using DistanceVector = std::vector<ExtendedDistance>;

/// Signed distances from each landmark to v, in landmark order.
DistanceVector distance_vector(const SignedDistanceMatrix& m, const LandmarkSet& s, Vertex v);

struct ResolveCheck {
  bool resolving = false;
  /// Two vertices sharing a distance vector, present when !resolving.
  std::optional<std::pair<Vertex, Vertex>> ambiguous;
};

ResolveCheck is_resolving(const SignedDistanceMatrix& m, const LandmarkSet& s);

struct MetricOptions {
  bool enumerate_all = false;
  /// Largest landmark count tried; unset means the graph order.
  std::optional<std::size_t> max_k;
  /// Worker threads for the subset search; 0 picks hardware concurrency.
  unsigned jobs = 1;
};

struct MetricResult {
  std::size_t beta = 0;
  /// Lexicographically least metric basis.
  LandmarkSet basis;
  /// Every metric basis in lexicographic order, when requested.
  std::optional<std::vector<LandmarkSet>> all_bases;
};

/// Exact metric dimension by increasing-size subset search over the
/// pair-separation cover. Throws BoundExceeded when options.max_k is too small.
MetricResult metric_dimension_exact(const SignedDistanceMatrix& m, const MetricOptions& options = {});

/// Greedy pair-separation cover: always resolving, not necessarily minimum.
LandmarkSet metric_dimension_greedy(const SignedDistanceMatrix& m);

/// Whether every vertex pair is doubly resolved by some landmark pair.
/// Requires a finite symmetric matrix (connected undirected graph) and at
/// least two landmarks; throws DomainError otherwise.
bool is_doubly_resolving(const SignedDistanceMatrix& m, const LandmarkSet& s);

struct DoubleResolveResult {
  std::size_t psi = 0;
  LandmarkSet witness;
};

DoubleResolveResult min_doubly_resolving(const SignedDistanceMatrix& m);

}  // namespace gamedim
