#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gamedim/digraph.hpp"

namespace gamedim {

/// A digraph whose vertices are game positions, identified by canonical
/// position labels.
struct GameGraph {
  Digraph graph;
  std::vector<std::string> labels;
  std::string ruleset_name;

  std::optional<Vertex> find(std::string_view label) const;
  /// Like find() but throws ArgumentError for unknown labels.
  Vertex vertex(std::string_view label) const;
};

/// Same labels in the same vertex order and the same arcs; the ruleset name
/// is ignored.
bool label_identical(const GameGraph& a, const GameGraph& b);

/// Default labels "0".."n-1" for graphs without position names.
std::vector<std::string> numeric_labels(std::size_t n);

/// Builds the game graph of every position reachable from `start`.
///
/// Vertices are numbered in breadth-first discovery order, so the start is
/// vertex 0. `moves(p)` returns the options of p; repeated options collapse
/// into one arc. `Position` must be totally ordered.
template <class Position, class MoveFn, class LabelFn>
GameGraph build_reachable(std::string name, const Position& start, MoveFn&& moves,
                          LabelFn&& label) {
  std::map<Position, Vertex> index;
  std::vector<Position> order;
  std::vector<Arc> arcs;
  index.emplace(start, 0);
  order.push_back(start);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Position current = order[i];
    for (const Position& next : moves(current)) {
      auto [it, inserted] = index.emplace(next, static_cast<Vertex>(order.size()));
      if (inserted) order.push_back(next);
      arcs.emplace_back(static_cast<Vertex>(i), it->second);
    }
  }
  GameGraph game;
  game.graph = Digraph::directed(order.size(), arcs);
  game.labels.reserve(order.size());
  for (const Position& p : order) game.labels.push_back(label(p));
  game.ruleset_name = std::move(name);
  return game;
}

/// Builds the game graph over an explicit list of positions (full
/// enumeration); vertex i is positions[i]. Moves must stay inside the list.
template <class Position, class MoveFn, class LabelFn>
GameGraph build_enumerated(std::string name, const std::vector<Position>& positions,
                           MoveFn&& moves, LabelFn&& label) {
  std::map<Position, Vertex> index;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    index.emplace(positions[i], static_cast<Vertex>(i));
  }
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    for (const Position& next : moves(positions[i])) {
      arcs.emplace_back(static_cast<Vertex>(i), index.at(next));
    }
  }
  GameGraph game;
  game.graph = Digraph::directed(positions.size(), arcs);
  game.labels.reserve(positions.size());
  for (const Position& p : positions) game.labels.push_back(label(p));
  game.ruleset_name = std::move(name);
  return game;
}

}  // namespace gamedim
