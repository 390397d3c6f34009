#pragma once

#include <string>
#include <string_view>

#include "gamedim/digraph.hpp"
#include "gamedim/game_graph.hpp"
#include "gamedim/metric.hpp"

namespace gamedim {

/// Graph JSON:
///   {"name": ..., "directed": bool,
///    "vertices": [{"id": 0, "label": ...}, ...],
///    "edges": [[u, v], ...]}
/// Undirected graphs list each edge once with u < v. `compact` puts the
/// whole document on one line.
std::string graph_to_json(const GameGraph& game, bool compact = false);

/// Throws FormatError on malformed documents (non-dense ids, bad edges).
GameGraph graph_from_json(std::string_view text);

/// Graphviz DOT; directed graphs use "->", undirected "--".
std::string graph_to_dot(const GameGraph& game);

/// 2-D JSON array of integers with "inf" for infinity.
std::string distances_to_json(const SignedDistanceMatrix& m, bool compact = false);
SignedDistanceMatrix distances_from_json(std::string_view text);

/// Comma-separated landmarks. Each item is a position label, or a vertex id
/// when no label matches; "#7" always means vertex id 7. Commas inside
/// brackets belong to the label.
LandmarkSet parse_landmarks(const GameGraph& game, std::string_view text);

/// Labels joined by ","; parse_landmarks inverts it.
std::string format_landmarks(const GameGraph& game, const LandmarkSet& s);

}  // namespace gamedim
