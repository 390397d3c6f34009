#include "gamedim/game_graph.hpp"

#include <algorithm>

#include "gamedim/errors.hpp"

namespace gamedim {

std::optional<Vertex> GameGraph::find(std::string_view label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<Vertex>(it - labels.begin());
}

Vertex GameGraph::vertex(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw ArgumentError("no position labelled '" + std::string(label) + "'");
}

bool label_identical(const GameGraph& a, const GameGraph& b) {
  return a.labels == b.labels && a.graph == b.graph;
}

std::vector<std::string> numeric_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

}  // namespace gamedim
