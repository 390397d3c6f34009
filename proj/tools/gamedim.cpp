// gamedim: build game graphs, compute signed distances, metric dimension and
// doubly resolving sets, and run the theorem harness.
//
// Exit codes: 0 success, 1 usage or argument error, 2 parse/format error,
// 3 solver bound exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "gamedim/dsl.hpp"
#include "gamedim/dyadic.hpp"
#include "gamedim/errors.hpp"
#include "gamedim/graph_io.hpp"
#include "gamedim/metric.hpp"
#include "gamedim/rulesets.hpp"
#include "gamedim/theorems.hpp"
#include "json.hpp"

namespace {

using namespace gamedim;

constexpr int kExitUsage = 1;
constexpr int kExitFormat = 2;
constexpr int kExitBound = 3;

/// A usage problem detected after CLI11 parsing (bad combination of flags).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << text;
}

std::vector<std::int64_t> parse_heaps(const std::string& text) {
  std::vector<std::int64_t> heaps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      heaps.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad heap list '" + text + "'");
    }
  }
  if (heaps.empty()) throw UsageError("--heaps needs at least one heap");
  return heaps;
}

struct Options {
  bool quiet = false;
  unsigned jobs = 0;

  // build
  std::string ruleset;
  std::string dsl_path;
  std::string heaps;
  int rows = 0;
  int cols = 0;
  std::string value;
  std::string output;
  std::string dot_path;

  // graph-consuming commands
  std::string graph_path;
  std::string second_graph_path;
  std::size_t max_k = 0;
  bool all_bases = false;
  bool heuristic = false;
  std::string landmarks;

  // verify-theorems
  VerifyLimits limits;
  std::size_t verify_max_k = 0;
  std::string report_json;
};

GameGraph build_game(const Options& o) {
  if (!o.dsl_path.empty()) {
    const ParseResult parsed = parse_ruleset(read_file(o.dsl_path));
    if (const auto* diag = std::get_if<ParseDiagnostic>(&parsed)) {
      throw FormatError(o.dsl_path + ":" + diag->to_string());
    }
    return build_from_spec(std::get<RulesetSpec>(parsed));
  }
  auto need_board = [&] {
    if (o.rows <= 0 || o.cols <= 0) throw UsageError("--rows and --cols are required");
  };
  if (o.ruleset == "nim" || o.ruleset == "hats") {
    if (o.heaps.empty()) throw UsageError("--heaps is required for heap games");
    const HeapPosition start(parse_heaps(o.heaps));
    return o.ruleset == "nim" ? nim_graph(start) : hats_graph(start);
  }
  if (o.ruleset == "kings") {
    need_board();
    return kings_graph(o.rows, o.cols);
  }
  if (o.ruleset == "bishops") {
    need_board();
    return bishops_game_graph(o.rows, o.cols).game;
  }
  if (o.ruleset == "foxgeese") {
    need_board();
    return fox_geese_graph(o.rows, o.cols);
  }
  if (o.ruleset == "canonical") {
    if (o.value.empty()) throw UsageError("--value is required for canonical games");
    return canonical_game_graph(Dyadic::from_rational(Rational::parse(o.value)));
  }
  throw UsageError("unknown ruleset '" + o.ruleset + "'");
}

int cmd_build(const Options& o) {
  const GameGraph game = build_game(o);
  if (!o.dot_path.empty()) write_output(o.dot_path, graph_to_dot(game));
  write_output(o.output, graph_to_json(game, o.quiet && o.output.empty()));
  if (!o.quiet && !o.output.empty()) {
    const GraphStats stats = game.graph.stats();
    std::cout << "wrote " << o.output << ": order " << stats.order << ", size " << stats.size
              << '\n';
  }
  return 0;
}

int cmd_dim(const Options& o) {
  const GameGraph game = graph_from_json(read_file(o.graph_path));
  const SignedDistanceMatrix m = signed_distance_matrix(game.graph, o.jobs);

  if (o.heuristic) {
    const LandmarkSet greedy = metric_dimension_greedy(m);
    if (o.quiet) {
      nlohmann::ordered_json j;
      j["upper_bound"] = greedy.size();
      j["landmarks"] = greedy.vertices();
      std::cout << j.dump() << '\n';
    } else {
      std::cout << "beta <= " << greedy.size() << '\n'
                << "landmarks = " << format_landmarks(game, greedy) << '\n';
    }
    return 0;
  }

  MetricOptions options;
  options.enumerate_all = o.all_bases;
  options.jobs = o.jobs;
  if (o.max_k > 0) options.max_k = o.max_k;
  const MetricResult result = metric_dimension_exact(m, options);
  if (o.quiet) {
    nlohmann::ordered_json j;
    j["beta"] = result.beta;
    j["basis"] = result.basis.vertices();
    if (result.all_bases) {
      j["all_bases"] = nlohmann::ordered_json::array();
      for (const auto& b : *result.all_bases) j["all_bases"].push_back(b.vertices());
    }
    std::cout << j.dump() << '\n';
    return 0;
  }
  std::cout << "beta = " << result.beta << '\n'
            << "basis = " << format_landmarks(game, result.basis) << '\n';
  if (result.all_bases) {
    std::cout << "bases (" << result.all_bases->size() << "):\n";
    for (const auto& b : *result.all_bases) std::cout << "  " << format_landmarks(game, b) << '\n';
  }
  return 0;
}

int cmd_check(const Options& o) {
  const GameGraph game = graph_from_json(read_file(o.graph_path));
  const LandmarkSet s = parse_landmarks(game, o.landmarks);
  const SignedDistanceMatrix m = signed_distance_matrix(game.graph, o.jobs);
  const ResolveCheck check = is_resolving(m, s);
  if (o.quiet) {
    nlohmann::ordered_json j;
    j["resolving"] = check.resolving;
    if (check.ambiguous) j["ambiguous"] = {check.ambiguous->first, check.ambiguous->second};
    std::cout << j.dump() << '\n';
    return 0;
  }
  if (check.resolving) {
    std::cout << "YES: " << format_landmarks(game, s) << " resolves the graph\n";
  } else {
    const auto [u, v] = *check.ambiguous;
    std::cout << "NO: " << game.labels[u] << " and " << game.labels[v]
              << " share the distance vector (";
    const DistanceVector dv = distance_vector(m, s, u);
    for (std::size_t i = 0; i < dv.size(); ++i) std::cout << (i ? ", " : "") << dv[i];
    std::cout << ")\n";
  }
  return 0;
}

int cmd_ddim(const Options& o) {
  const GameGraph game = graph_from_json(read_file(o.graph_path));
  if (game.graph.is_directed()) throw DomainError("ddim needs an undirected graph");
  const SignedDistanceMatrix m = signed_distance_matrix(game.graph, o.jobs);
  const DoubleResolveResult result = min_doubly_resolving(m);
  if (o.quiet) {
    nlohmann::ordered_json j;
    j["psi"] = result.psi;
    j["witness"] = result.witness.vertices();
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "psi = " << result.psi << '\n'
              << "witness = " << format_landmarks(game, result.witness) << '\n';
  }
  return 0;
}

int cmd_dist(const Options& o) {
  const GameGraph game = graph_from_json(read_file(o.graph_path));
  write_output(o.output, distances_to_json(signed_distance_matrix(game.graph, o.jobs), o.quiet));
  return 0;
}

int cmd_product(const Options& o) {
  const GameGraph g = graph_from_json(read_file(o.graph_path));
  const GameGraph h = graph_from_json(read_file(o.second_graph_path));
  GameGraph product;
  product.graph = cartesian_product(g.graph, h.graph);
  product.ruleset_name = g.ruleset_name + "x" + h.ruleset_name;
  for (const auto& a : g.labels) {
    for (const auto& b : h.labels) product.labels.push_back("[" + a + ";" + b + "]");
  }
  write_output(o.output, graph_to_json(product, o.quiet && o.output.empty()));
  return 0;
}

int cmd_verify(const Options& o) {
  VerifyLimits limits = o.limits;
  if (o.verify_max_k > 0) limits.max_k = o.verify_max_k;
  const auto reports = verify_all(limits, o.jobs);
  if (!o.report_json.empty()) {
    std::string lines;
    for (const auto& r : reports) lines += report_to_json_line(r) + '\n';
    write_output(o.report_json, lines);
  }
  std::size_t bad = 0;
  for (const auto& r : reports) {
    if (r.status == ReportStatus::Mismatch || r.status == ReportStatus::SolverBound) ++bad;
  }
  if (o.quiet) {
    std::cout << reports.size() << " reports, " << bad << " failing\n";
  } else {
    std::cout << format_report_table(reports);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Game graphs, signed distances and metric dimension"};
  app.require_subcommand(1);
  app.add_flag("-q,--quiet", o.quiet, "Single-line machine-readable output");
  app.add_option("-j,--jobs", o.jobs, "Worker threads (default: available parallelism)");

  auto* build = app.add_subcommand("build", "Construct a game graph and write it as JSON");
  auto* ruleset_opt = build->add_option("--ruleset", o.ruleset, "Built-in ruleset")
                          ->check(CLI::IsMember({"nim", "hats", "kings", "bishops", "foxgeese",
                                                 "canonical"}));
  auto* dsl_opt = build->add_option("--dsl", o.dsl_path, "Ruleset description file (.game)");
  ruleset_opt->excludes(dsl_opt);
  build->add_option("--heaps", o.heaps, "Comma-separated heap sizes, e.g. 7,7");
  build->add_option("--rows", o.rows, "Board rows");
  build->add_option("--cols", o.cols, "Board columns");
  build->add_option("--value", o.value, "Dyadic value p/q for canonical games");
  build->add_option("-o,--output", o.output, "JSON output path (default stdout)");
  build->add_option("--dot", o.dot_path, "Also write Graphviz DOT here");
  build->add_flag("-q,--quiet", o.quiet);

  auto* dim = app.add_subcommand("dim", "Metric dimension of a graph file");
  dim->add_option("graph", o.graph_path, "Graph JSON")->required();
  dim->add_option("--max-k", o.max_k, "Largest basis size to try");
  dim->add_flag("--all-bases", o.all_bases, "List every metric basis");
  dim->add_flag("--heuristic", o.heuristic, "Greedy upper bound instead of the exact search");
  dim->add_flag("-q,--quiet", o.quiet);
  dim->add_option("-j,--jobs", o.jobs);

  auto* check = app.add_subcommand("check", "Test whether a landmark set resolves a graph");
  check->add_option("graph", o.graph_path, "Graph JSON")->required();
  check->add_option("--landmarks", o.landmarks, "Comma-separated labels or ids (#id)")
      ->required();
  check->add_flag("-q,--quiet", o.quiet);
  check->add_option("-j,--jobs", o.jobs);

  auto* ddim = app.add_subcommand("ddim", "Smallest doubly resolving set of an undirected graph");
  ddim->add_option("graph", o.graph_path, "Graph JSON")->required();
  ddim->add_flag("-q,--quiet", o.quiet);
  ddim->add_option("-j,--jobs", o.jobs);

  auto* dist = app.add_subcommand("dist", "Signed distance matrix as JSON");
  dist->add_option("graph", o.graph_path, "Graph JSON")->required();
  dist->add_option("-o,--output", o.output, "Output path (default stdout)");
  dist->add_flag("-q,--quiet", o.quiet);
  dist->add_option("-j,--jobs", o.jobs);

  auto* product = app.add_subcommand("product", "Cartesian product of two undirected graphs");
  product->add_option("first", o.graph_path, "Graph JSON")->required();
  product->add_option("second", o.second_graph_path, "Graph JSON")->required();
  product->add_option("-o,--output", o.output, "Output path (default stdout)");
  product->add_flag("-q,--quiet", o.quiet);

  auto* verify = app.add_subcommand("verify-theorems", "Check closed forms against solvers");
  verify->add_option("--max-nim1", o.limits.nim1_max, "Largest single heap");
  verify->add_option("--max-nim2", o.limits.nim2_max, "Largest diagonal two-heap position");
  verify->add_option("--max-hats", o.limits.hats_max_b, "Largest HATS-Nim heap");
  verify->add_option("--max-kings", o.limits.kings_max, "Longest king strip");
  verify->add_option("--max-bishops", o.limits.bishops_max_cols, "Widest bishop board");
  verify->add_option("--fox-geese", o.limits.fox_geese, "Check 3x3 fox and geese (0/1)");
  verify->add_option("--max-k", o.verify_max_k, "Per-instance solver bound");
  verify->add_option("--report-json", o.report_json, "Write JSON lines here");
  verify->add_flag("-q,--quiet", o.quiet);
  verify->add_option("-j,--jobs", o.jobs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*build) {
      if (o.ruleset.empty() && o.dsl_path.empty()) throw UsageError("need --ruleset or --dsl");
      return cmd_build(o);
    }
    if (*dim) return cmd_dim(o);
    if (*check) return cmd_check(o);
    if (*ddim) return cmd_ddim(o);
    if (*dist) return cmd_dist(o);
    if (*product) return cmd_product(o);
    if (*verify) return cmd_verify(o);
  } catch (const UsageError& e) {
    std::cerr << "gamedim: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& e) {
    std::cerr << "gamedim: " << e.what() << '\n';
    return kExitFormat;
  } catch (const BoundExceeded& e) {
    std::cerr << "gamedim: " << e.what() << '\n';
    return kExitBound;
  } catch (const std::exception& e) {
    std::cerr << "gamedim: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
