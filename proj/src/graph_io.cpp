#include "gamedim/graph_io.hpp"

#include <charconv>
#include <set>

#include "json.hpp"

#include "gamedim/errors.hpp"

namespace gamedim {

using nlohmann::json;

namespace {

std::string quoted(const std::string& s) { return json(s).dump(); }

std::string distance_token(ExtendedDistance d) {
  return d.is_infinite() ? "\"inf\"" : std::to_string(d.value());
}

}  // namespace

std::string graph_to_json(const GameGraph& game, bool compact) {
  const std::string nl = compact ? "" : "\n";
  const std::string in1 = compact ? "" : "  ";
  const std::string in2 = compact ? "" : "    ";
  const std::string sep = compact ? ":" : ": ";
  const Digraph& g = game.graph;

  std::string out = "{" + nl;
  out += in1 + "\"name\"" + sep + quoted(game.ruleset_name) + "," + nl;
  out += in1 + "\"directed\"" + sep + (g.is_directed() ? "true" : "false") + "," + nl;
  out += in1 + "\"vertices\"" + sep + "[";
  for (std::size_t v = 0; v < g.order(); ++v) {
    out += (v == 0 ? nl : "," + nl) + in2 + "{\"id\"" + sep + std::to_string(v) + "," +
           (compact ? "" : " ") + "\"label\"" + sep + quoted(game.labels.at(v)) + "}";
  }
  out += (g.order() > 0 ? nl + in1 : "") + "]," + nl;
  out += in1 + "\"edges\"" + sep + "[";
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out += (i == 0 ? nl : "," + nl) + in2 + "[" + std::to_string(edges[i].first) + "," +
           (compact ? "" : " ") + std::to_string(edges[i].second) + "]";
  }
  out += (edges.empty() ? "" : nl + in1) + "]" + nl + "}" + nl;
  return out;
}

GameGraph graph_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid graph JSON: ") + e.what());
  }
  try {
    if (!doc.is_object()) throw FormatError("graph JSON must be an object");
    GameGraph game;
    game.ruleset_name = doc.at("name").get<std::string>();
    const bool directed = doc.at("directed").get<bool>();
    const auto& vertices = doc.at("vertices");
    if (!vertices.is_array()) throw FormatError("\"vertices\" must be an array");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (vertices[i].at("id").get<std::int64_t>() != static_cast<std::int64_t>(i)) {
        throw FormatError("vertex ids must be dense and ascending from 0");
      }
      game.labels.push_back(vertices[i].at("label").get<std::string>());
    }
    if (std::set<std::string>(game.labels.begin(), game.labels.end()).size() != game.labels.size()) {
      throw FormatError("vertex labels must be unique");
    }
    std::vector<Arc> arcs;
    for (const auto& edge : doc.at("edges")) {
      if (!edge.is_array() || edge.size() != 2) throw FormatError("edges must be [u, v] pairs");
      const auto u = edge[0].get<std::int64_t>();
      const auto v = edge[1].get<std::int64_t>();
      if (u < 0 || v < 0 || u >= static_cast<std::int64_t>(vertices.size()) ||
          v >= static_cast<std::int64_t>(vertices.size()) || u == v) {
        throw FormatError("edge [" + std::to_string(u) + ", " + std::to_string(v) +
                          "] is out of range or a self-loop");
      }
      arcs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    game.graph = directed ? Digraph::directed(vertices.size(), arcs)
                          : Digraph::undirected(vertices.size(), arcs);
    return game;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed graph JSON: ") + e.what());
  }
}

std::string graph_to_dot(const GameGraph& game) {
  const Digraph& g = game.graph;
  const char* arrow = g.is_directed() ? " -> " : " -- ";
  std::string out = std::string(g.is_directed() ? "digraph " : "graph ") +
                    quoted(game.ruleset_name) + " {\n";
  for (std::size_t v = 0; v < g.order(); ++v) {
    out += "  " + std::to_string(v) + " [label=" + quoted(game.labels.at(v)) + "];\n";
  }
  for (auto [u, v] : g.edges()) {
    out += "  " + std::to_string(u) + arrow + std::to_string(v) + ";\n";
  }
  return out + "}\n";
}

std::string distances_to_json(const SignedDistanceMatrix& m, bool compact) {
  std::string out = "[";
  for (Vertex u = 0; u < m.order(); ++u) {
    out += (u == 0 ? "" : ",");
    out += compact ? "[" : "\n  [";
    for (Vertex v = 0; v < m.order(); ++v) {
      if (v > 0) out += compact ? "," : ", ";
      out += distance_token(m.at(u, v));
    }
    out += "]";
  }
  out += (compact || m.order() == 0) ? "]\n" : "\n]\n";
  return out;
}

SignedDistanceMatrix distances_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid distance JSON: ") + e.what());
  }
  if (!doc.is_array()) throw FormatError("distance matrix must be an array");
  const std::size_t n = doc.size();
  std::vector<ExtendedDistance> entries;
  entries.reserve(n * n);
  for (const auto& row : doc) {
    if (!row.is_array() || row.size() != n) throw FormatError("distance matrix must be square");
    for (const auto& cell : row) {
      if (cell.is_string() && cell.get<std::string>() == "inf") {
        entries.push_back(kInfinity);
      } else if (cell.is_number_integer()) {
        entries.emplace_back(cell.get<std::int32_t>());
      } else {
        throw FormatError("distance entries must be integers or \"inf\"");
      }
    }
  }
  return SignedDistanceMatrix(n, std::move(entries));
}

LandmarkSet parse_landmarks(const GameGraph& game, std::string_view text) {
  std::vector<std::string> items;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == ',' && depth == 0) {
      items.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty() || !items.empty()) items.push_back(current);

  std::vector<Vertex> vertices;
  for (std::string item : items) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    item = first == std::string::npos ? "" : item.substr(first, last - first + 1);
    if (item.empty()) throw FormatError("empty landmark in '" + std::string(text) + "'");

    const bool explicit_id = item.front() == '#';
    if (!explicit_id) {
      if (auto v = game.find(item)) {
        vertices.push_back(*v);
        continue;
      }
    }
    const std::string_view digits = explicit_id ? std::string_view(item).substr(1) : item;
    std::uint64_t id = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), id);
    if (digits.empty() || ec != std::errc{} || end != digits.data() + digits.size()) {
      throw FormatError("unknown landmark '" + item + "'");
    }
    if (id >= game.graph.order()) throw FormatError("landmark id " + item + " out of range");
    vertices.push_back(static_cast<Vertex>(id));
  }
  try {
    return LandmarkSet(std::move(vertices));
  } catch (const ArgumentError& e) {
    throw FormatError(e.what());
  }
}

std::string format_landmarks(const GameGraph& game, const LandmarkSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ",";
    out += game.labels.at(s[i]);
  }
  return out;
}

}  // namespace gamedim
