#include "doctest.h"
#include "gamedim/dyadic.hpp"
#include "gamedim/errors.hpp"
#include "gamedim/graph_io.hpp"
#include "gamedim/rulesets.hpp"

using namespace gamedim;

namespace {

std::vector<GameGraph> sample_graphs() {
  return {nim_graph(HeapPosition({3, 3})), hats_graph(HeapPosition({2, 3})), kings_graph(1, 3),
          bishops_game_graph(3, 3).game, fox_geese_graph(3, 3),
          canonical_game_graph(Dyadic(3, 2))};
}

}  // namespace

TEST_CASE("graph JSON round-trip") {
  for (const GameGraph& g : sample_graphs()) {
    for (bool compact : {false, true}) {
      const std::string text = graph_to_json(g, compact);
      const GameGraph back = graph_from_json(text);
      CHECK(back.ruleset_name == g.ruleset_name);
      CHECK(back.labels == g.labels);
      CHECK(back.graph == g.graph);
      CHECK(graph_to_json(back, compact) == text);
    }
  }
  const std::string compact = graph_to_json(kings_graph(1, 2), true);
  CHECK(compact.find('\n') == std::string::npos);
  CHECK(compact.rfind("{\"name\":\"kings\",\"directed\":true,", 0) == 0);
}

TEST_CASE("graph JSON rejects malformed documents") {
  CHECK_THROWS_AS(graph_from_json("{"), FormatError);
  CHECK_THROWS_AS(graph_from_json("[]"), FormatError);
  const char* bad_ids =
      R"({"name":"x","directed":true,"vertices":[{"id":1,"label":"a"}],"edges":[]})";
  CHECK_THROWS_AS(graph_from_json(bad_ids), FormatError);
  const char* loop =
      R"({"name":"x","directed":true,"vertices":[{"id":0,"label":"a"}],"edges":[[0,0]]})";
  CHECK_THROWS_AS(graph_from_json(loop), FormatError);
  const char* range =
      R"({"name":"x","directed":false,"vertices":[{"id":0,"label":"a"}],"edges":[[0,3]]})";
  CHECK_THROWS_AS(graph_from_json(range), FormatError);
  const char* dup = R"({"name":"x","directed":true,"vertices":[{"id":0,"label":"a"},)"
                    R"({"id":1,"label":"a"}],"edges":[]})";
  CHECK_THROWS_AS(graph_from_json(dup), FormatError);
}

TEST_CASE("dot output") {
  const std::string dot = graph_to_dot(nim_graph(HeapPosition({1})));
  CHECK(dot == "digraph \"nim\" {\n  0 [label=\"(1)\"];\n  1 [label=\"0\"];\n  0 -> 1;\n}\n");
  CHECK(graph_to_dot(bishops_game_graph(2, 2).game).find(" -- ") != std::string::npos);
}

TEST_CASE("distance JSON with infinity round-trips") {
  for (const GameGraph& g : sample_graphs()) {
    const auto m = signed_distance_matrix(g.graph);
    for (bool compact : {false, true}) {
      const std::string text = distances_to_json(m, compact);
      CHECK(distances_from_json(text) == m);
    }
  }
  const auto m = signed_distance_matrix(kings_graph(1, 2).graph);
  CHECK(distances_to_json(m, true).find("\"inf\"") != std::string::npos);
  CHECK_THROWS_AS(distances_from_json("[[0,1]]"), FormatError);
  CHECK_THROWS_AS(distances_from_json("[[\"oops\"]]"), FormatError);
}

TEST_CASE("landmark parsing") {
  const GameGraph nim = nim_graph(HeapPosition({2, 3}));
  const LandmarkSet s = parse_landmarks(nim, "(1,3), (2)");
  REQUIRE(s.size() == 2);
  CHECK(s[0] == nim.vertex("(1,3)"));
  CHECK(s[1] == nim.vertex("(2)"));
  CHECK(parse_landmarks(nim, format_landmarks(nim, s)) == s);
  CHECK(parse_landmarks(nim, "#0,1")[1] == 1);

  // "0" is a label (the empty position), "#0" is vertex id 0.
  CHECK(parse_landmarks(nim, "0")[0] == nim.vertex("0"));
  CHECK(parse_landmarks(nim, "#0")[0] == 0);

  const GameGraph fox = fox_geese_graph(3, 3);
  const std::string label = "F(1,3)|G{(1,1),(2,2)}";
  CHECK(parse_landmarks(fox, label + "," + label.substr(0, 0) + "#5")[0] == fox.vertex(label));

  CHECK_THROWS_AS(parse_landmarks(nim, "(9,9)"), FormatError);
  CHECK_THROWS_AS(parse_landmarks(nim, "#999"), FormatError);
  CHECK_THROWS_AS(parse_landmarks(nim, "(2),,(1)"), FormatError);
  CHECK_THROWS_AS(parse_landmarks(nim, "(2),(2)"), FormatError);
}
