#include "gamedim/theorems.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <sstream>

#include "gamedim/digraph.hpp"
#include "gamedim/errors.hpp"
#include "gamedim/metric.hpp"
#include "gamedim/rulesets.hpp"
#include "json.hpp"
#include "parallel.hpp"

namespace gamedim {

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

std::uint64_t ceil_half(std::uint64_t n) { return (n + 1) / 2; }

void require_positive(std::uint64_t n, const char* what) {
  if (n == 0) throw ArgumentError(std::string(what) + " must be at least 1");
}

}  // namespace

Nim1Expectation expected_nim1(std::uint64_t n) {
  require_positive(n, "heap size");
  return {n + 1, ceil_half(n), binomial(n + 2, 2), binomial(n + 1, 2)};
}

Nim2Expectation expected_nim2(std::uint64_t n) {
  require_positive(n, "heap size");
  return {(n * n + 3 * n + 2) / 2, n * (n + 1) * (n + 1) / 2, ceil_half(n)};
}

std::uint64_t expected_hats(std::uint64_t a, std::uint64_t b) {
  require_positive(a, "heap size");
  if (a > b) std::swap(a, b);
  const std::uint64_t g = std::gcd(a, b);
  a /= g;
  b /= g;
  if (a == b || (a == 1 && b == 2)) return 1;
  if ((b == a + 1 && b > 2) || (a == 1 && b > 2)) return 2;
  return 3;
}

std::uint64_t expected_kings(std::uint64_t n) {
  if (n < 2) throw ArgumentError("king strips need n >= 2");
  return n <= 3 ? 2 : 3;
}

BetaRange expected_bishops(std::uint64_t a, std::uint64_t b) {
  if (a == 2) {
    if (b < 2) throw ArgumentError("2 x n bishop boards need n >= 2");
    return {2, 2};
  }
  if (a == 3) {
    if (b < 3) throw ArgumentError("3 x n bishop boards need n >= 3");
    if (b <= 4) return {3, 3};
    return {3, 4};
  }
  throw ArgumentError("closed forms exist only for 2 x n and 3 x n bishop boards");
}

std::string to_string(ReportStatus status) {
  switch (status) {
    case ReportStatus::Match: return "MATCH";
    case ReportStatus::Mismatch: return "MISMATCH";
    case ReportStatus::PaperDiscrepancyNoted: return "PAPER_DISCREPANCY_NOTED";
    case ReportStatus::SolverBound: return "SOLVER_BOUND";
  }
  return "?";
}

VerifyLimits VerifyLimits::none() {
  VerifyLimits limits;
  limits.nim1_max = 0;
  limits.nim2_max = 0;
  limits.hats_max_b = 0;
  limits.kings_max = 0;
  limits.bishops_max_cols = 0;
  limits.fox_geese = false;
  return limits;
}

namespace {

/// MATCH iff every expected field is present and equal in `computed`; a beta
/// range matches when the computed beta lies inside it.
ReportStatus compare(const Quantities& expected, const Quantities& computed) {
  auto same = [](const auto& e, const auto& c) { return !e || e == c; };
  bool ok = same(expected.order, computed.order) && same(expected.size, computed.size) &&
            same(expected.beta, computed.beta) && same(expected.holds, computed.holds);
  if (expected.beta_min || expected.beta_max) {
    ok = ok && computed.beta && (!expected.beta_min || *computed.beta >= *expected.beta_min) &&
         (!expected.beta_max || *computed.beta <= *expected.beta_max);
  }
  return ok ? ReportStatus::Match : ReportStatus::Mismatch;
}

TheoremReport make_report(std::string id, std::string instance, Quantities expected,
                          Quantities computed, std::string note = {}) {
  TheoremReport report{std::move(id), std::move(instance), expected, computed,
                       compare(expected, computed), std::move(note)};
  return report;
}

TheoremReport solver_bound_report(std::string id, std::string instance, Quantities expected,
                                  const BoundExceeded& e) {
  return {std::move(id), std::move(instance), expected, {}, ReportStatus::SolverBound, e.what()};
}

struct Solved {
  SignedDistanceMatrix distances;
  MetricResult metric;
};

Solved solve(const Digraph& g, const VerifyLimits& limits) {
  Solved s{signed_distance_matrix(g), {}};
  MetricOptions options;
  options.max_k = limits.max_k;
  s.metric = metric_dimension_exact(s.distances, options);
  return s;
}

bool resolves(const SignedDistanceMatrix& m, std::vector<Vertex> landmarks) {
  return is_resolving(m, LandmarkSet(std::move(landmarks))).resolving;
}

std::string paren(std::uint64_t a, std::uint64_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

Quantities holds_quantity(bool holds) {
  Quantities q;
  q.holds = holds;
  return q;
}

Quantities beta_quantity(std::uint64_t beta) {
  Quantities q;
  q.beta = beta;
  return q;
}

using Task = std::function<std::vector<TheoremReport>()>;

// ---------------------------------------------------------------------------

std::vector<TheoremReport> check_nim1(std::uint64_t n, const VerifyLimits& limits) {
  const auto e = expected_nim1(n);
  const std::string instance = "*" + std::to_string(n);
  Quantities expected{e.order, e.size_stated, e.beta, {}, {}, {}};
  const GameGraph game = nim_graph(HeapPosition({static_cast<std::int64_t>(n)}));
  try {
    const Solved s = solve(game.graph, limits);
    const GraphStats stats = game.graph.stats();
    Quantities computed{stats.order, stats.size, s.metric.beta, {}, {}, {}};
    TheoremReport report = make_report("nim-single-heap", instance, expected, computed);
    if (stats.order == e.order && s.metric.beta == e.beta && stats.size != e.size_stated &&
        stats.size == e.size_construction) {
      report.status = ReportStatus::PaperDiscrepancyNoted;
      report.note = "acyclic tournament on " + std::to_string(e.order) + " vertices has C(" +
                    std::to_string(n + 1) + ",2)=" + std::to_string(e.size_construction) +
                    " arcs; stated size C(" + std::to_string(n + 2) +
                    ",2)=" + std::to_string(e.size_stated);
    }
    return {report};
  } catch (const BoundExceeded& ex) {
    return {solver_bound_report("nim-single-heap", instance, expected, ex)};
  }
}

std::vector<TheoremReport> check_nim2(std::uint64_t n, const VerifyLimits& limits) {
  const auto e = expected_nim2(n);
  const std::string instance = paren(n, n);
  Quantities expected{e.order, e.size, e.beta, {}, {}, {}};
  const auto heap = static_cast<std::int64_t>(n);
  const GameGraph game = nim_graph(HeapPosition({heap, heap}));
  std::vector<TheoremReport> out;
  try {
    const Solved s = solve(game.graph, limits);
    const GraphStats stats = game.graph.stats();
    out.push_back(make_report("nim-diagonal", instance, expected,
                              {stats.order, stats.size, s.metric.beta, {}, {}, {}}));

    std::vector<Vertex> odd_diagonal;
    for (std::uint64_t k = 1; k <= n; k += 2) odd_diagonal.push_back(game.vertex(paren(k, k)));
    out.push_back(make_report("nim-diagonal-odd-witness", instance, holds_quantity(true),
                              holds_quantity(resolves(s.distances, odd_diagonal)),
                              "landmarks (k,k) for odd k"));
  } catch (const BoundExceeded& ex) {
    out.push_back(solver_bound_report("nim-diagonal", instance, expected, ex));
  }
  return out;
}

std::vector<TheoremReport> check_hats(std::uint64_t a, std::uint64_t b, const VerifyLimits& limits) {
  const std::string instance = paren(a, b);
  Quantities expected = beta_quantity(expected_hats(a, b));
  const HeapPosition start = gcd_normalize(
      HeapPosition({static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)}));
  const GameGraph game = hats_graph(start);
  try {
    const Solved s = solve(game.graph, limits);
    return {make_report("hats-two-heap", instance, expected,
                        {game.graph.order(), {}, s.metric.beta, {}, {}, {}},
                        "normalized " + start.label())};
  } catch (const BoundExceeded& ex) {
    return {solver_bound_report("hats-two-heap", instance, expected, ex)};
  }
}

struct KingTableRow {
  const char* vertex;
  ExtendedDistance from_k1;
  ExtendedDistance from_k3;
};

/// Published signed distances from landmarks K1 and k3 on the 1 x 3 strip.
const std::vector<KingTableRow>& king_strip_table() {
  static const std::vector<KingTableRow> table = {
      {"K1k2", ExtendedDistance(-2), ExtendedDistance(-3)},
      {"K1k3", ExtendedDistance(-3), ExtendedDistance(-3)},
      {"K2k1", ExtendedDistance(-1), ExtendedDistance(-2)},
      {"K2k3", ExtendedDistance(-3), ExtendedDistance(-2)},
      {"K3k1", ExtendedDistance(-2), ExtendedDistance(-2)},
      {"K3k2", ExtendedDistance(-2), ExtendedDistance(-1)},
      {"K2", ExtendedDistance(1), kInfinity},
      {"K3", ExtendedDistance(2), kInfinity},
      {"k1", kInfinity, ExtendedDistance(2)},
      {"k2", kInfinity, ExtendedDistance(1)},
  };
  return table;
}

std::vector<TheoremReport> check_kings(std::uint64_t n, const VerifyLimits& limits) {
  const std::string instance = "1x" + std::to_string(n);
  Quantities expected = beta_quantity(expected_kings(n));
  const GameGraph game = kings_graph(1, static_cast<int>(n));
  std::vector<TheoremReport> out;
  try {
    const Solved s = solve(game.graph, limits);
    out.push_back(make_report("king-strip", instance, expected,
                              {game.graph.order(), {}, s.metric.beta, {}, {}, {}}));

    if (n == 2) {
      const bool ok = resolves(s.distances, {game.vertex("K2"), game.vertex("k1")});
      out.push_back(make_report("king-strip-witness", instance, holds_quantity(true), holds_quantity(ok),
                                "landmarks K2,k1"));
    }
    if (n == 3) {
      const Vertex k1 = game.vertex("K1");
      const Vertex k3 = game.vertex("k3");
      bool table_ok = true;
      std::string diff;
      for (const auto& row : king_strip_table()) {
        const Vertex v = game.vertex(row.vertex);
        if (s.distances.at(k1, v) != row.from_k1 || s.distances.at(k3, v) != row.from_k3) {
          table_ok = false;
          diff += std::string(diff.empty() ? "" : "; ") + row.vertex;
        }
      }
      out.push_back(make_report("king-strip-table", instance, holds_quantity(true),
                                holds_quantity(table_ok),
                                table_ok ? "10 rows from K1,k3 reproduced" : "differs: " + diff));
    }
    if (n > 3) {
      const bool ok = resolves(s.distances,
                               {game.vertex("K1"), game.vertex("K1k2"), game.vertex("K2k1")});
      out.push_back(make_report("king-strip-witness", instance, holds_quantity(true), holds_quantity(ok),
                                "landmarks K1,K1k2,K2k1"));
    }
  } catch (const BoundExceeded& ex) {
    out.push_back(solver_bound_report("king-strip", instance, expected, ex));
  }
  return out;
}

std::vector<TheoremReport> check_bishops(int rows, int cols, const VerifyLimits& limits) {
  const std::string instance = std::to_string(rows) + "x" + std::to_string(cols);
  const BetaRange range = expected_bishops(static_cast<std::uint64_t>(rows),
                                           static_cast<std::uint64_t>(cols));
  Quantities expected;
  expected.order = static_cast<std::uint64_t>(((rows * cols + 1) / 2) * ((rows * cols) / 2));
  if (range.exact()) {
    expected.beta = range.min;
  } else {
    expected.beta_min = range.min;
    expected.beta_max = range.max;
  }

  const BishopGame bishops = bishops_game_graph(rows, cols);
  const Digraph& graph = bishops.game.graph;
  std::vector<TheoremReport> out;
  Solved s;
  try {
    s = solve(graph, limits);
  } catch (const BoundExceeded& ex) {
    out.push_back(solver_bound_report("bishops", instance, expected, ex));
    return out;
  }
  out.push_back(make_report("bishops", instance, expected,
                            {graph.order(), {}, s.metric.beta, {}, {}, {}}));

  using Placement = std::pair<Square, Square>;
  auto witness = [&](const std::vector<Placement>& placements, const std::string& text) {
    std::vector<Vertex> landmarks;
    for (const auto& [a, b] : placements) landmarks.push_back(bishops_vertex(bishops, a, b));
    out.push_back(make_report("bishops-witness", instance, holds_quantity(true),
                              holds_quantity(resolves(s.distances, landmarks)), text));
  };
  if (rows == 3 && cols == 3) {
    witness({{{0, 0}, {0, 1}}, {{0, 0}, {1, 0}}, {{0, 2}, {0, 1}}},
            "((0,0),(0,1)),((0,0),(1,0)),((0,2),(0,1))");
  }
  if (rows == 3 && cols == 4) {
    witness({{{0, 1}, {0, 0}}, {{1, 0}, {1, 3}}, {{2, 3}, {1, 3}}},
            "((0,1),(0,0)),((1,0),(1,3)),((2,3),(1,3))");
  }

  const Digraph& dark = bishops.boards.dark_component;
  const Digraph& light = bishops.boards.light_component;
  const GraphAnalysis dark_shape = analyze(dark);
  const GraphAnalysis light_shape = analyze(light);
  const bool dark_path = dark_shape.components.size() == 1 && dark_shape.is_path[0];
  const bool light_path = light_shape.components.size() == 1 && light_shape.is_path[0];

  // A product with metric dimension 2 must have a path factor.
  if (s.metric.beta == 2) {
    out.push_back(make_report("product-path-factor", instance, holds_quantity(true),
                              holds_quantity(dark_path || light_path),
                              std::string("dark ") + (dark_path ? "path" : "not path") +
                                  ", light " + (light_path ? "path" : "not path")));
  }

  // beta(G x H) <= beta(G) + psi(H) - 1, in both factor orders.
  if (rows == 3) {
    try {
      const SignedDistanceMatrix dark_m = signed_distance_matrix(dark);
      const SignedDistanceMatrix light_m = signed_distance_matrix(light);
      const std::uint64_t beta_dark = metric_dimension_exact(dark_m).beta;
      const std::uint64_t beta_light = metric_dimension_exact(light_m).beta;
      const std::uint64_t psi_dark = min_doubly_resolving(dark_m).psi;
      const std::uint64_t psi_light = min_doubly_resolving(light_m).psi;
      const std::uint64_t bound = std::min(beta_dark + psi_light, beta_light + psi_dark) - 1;
      out.push_back(make_report(
          "product-bound", instance, holds_quantity(true), holds_quantity(s.metric.beta <= bound),
          "beta=" + std::to_string(s.metric.beta) + " dark(beta=" + std::to_string(beta_dark) +
              ",psi=" + std::to_string(psi_dark) + ") light(beta=" + std::to_string(beta_light) +
              ",psi=" + std::to_string(psi_light) + ")"));
    } catch (const DomainError& ex) {
      out.push_back({"product-bound", instance, holds_quantity(true), {}, ReportStatus::Mismatch,
                     ex.what()});
    }
  }
  return out;
}

std::vector<TheoremReport> check_fox_geese(const VerifyLimits& limits) {
  const FoxGeeseBoard board = fox_geese_board(3, 3);
  Quantities expected{board.expected_order(), 48, 3, {}, {}, {}};
  const GameGraph game = fox_geese_graph(3, 3);
  std::vector<TheoremReport> out;
  try {
    const Solved s = solve(game.graph, limits);
    const GraphStats stats = game.graph.stats();
    out.push_back(make_report("fox-geese", "3x3", expected,
                              {stats.order, stats.size, s.metric.beta, {}, {}, {}},
                              "s=" + std::to_string(board.usable_count()) +
                                  " g=" + std::to_string(board.geese_count())));

    // The published table lists squares as (column, row); geese advance
    // along the second coordinate.
    struct Listed {
      Square fox, goose1, goose2;
    };
    const std::vector<Listed> table = {
        {{1, 3}, {1, 1}, {2, 2}}, {{1, 3}, {1, 1}, {3, 1}}, {{1, 1}, {1, 3}, {3, 3}}};
    std::vector<Vertex> landmarks;
    for (const auto& row : table) {
      auto swap_axes = [](Square sq) { return Square{sq.col, sq.row}; };
      FoxGeesePosition p{swap_axes(row.fox), {swap_axes(row.goose1), swap_axes(row.goose2)}};
      std::sort(p.geese.begin(), p.geese.end());
      landmarks.push_back(game.vertex(p.label()));
    }
    out.push_back(make_report("fox-geese-basis", "3x3", holds_quantity(true),
                              holds_quantity(resolves(s.distances, landmarks)),
                              "three listed positions, (column,row) coordinates"));
  } catch (const BoundExceeded& ex) {
    out.push_back(solver_bound_report("fox-geese", "3x3", expected, ex));
  }
  return out;
}

}  // namespace

std::vector<TheoremReport> verify_all(const VerifyLimits& limits, unsigned jobs) {
  std::vector<Task> tasks;
  for (std::uint64_t n = 1; n <= limits.nim1_max; ++n) {
    tasks.emplace_back([n, &limits] { return check_nim1(n, limits); });
  }
  for (std::uint64_t n = 1; n <= limits.nim2_max; ++n) {
    tasks.emplace_back([n, &limits] { return check_nim2(n, limits); });
  }
  for (std::uint64_t b = 1; b <= limits.hats_max_b; ++b) {
    for (std::uint64_t a = 1; a <= b; ++a) {
      tasks.emplace_back([a, b, &limits] { return check_hats(a, b, limits); });
    }
  }
  for (std::uint64_t n = 2; n <= limits.kings_max; ++n) {
    tasks.emplace_back([n, &limits] { return check_kings(n, limits); });
  }
  for (int rows : {2, 3}) {
    for (int cols = rows; cols <= static_cast<int>(limits.bishops_max_cols); ++cols) {
      tasks.emplace_back([rows, cols, &limits] { return check_bishops(rows, cols, limits); });
    }
  }
  if (limits.fox_geese) {
    tasks.emplace_back([&limits] { return check_fox_geese(limits); });
  }

  std::vector<std::vector<TheoremReport>> results(tasks.size());
  detail::parallel_for(tasks.size(), jobs, [&](std::size_t i) { results[i] = tasks[i](); });

  std::vector<TheoremReport> reports;
  for (auto& batch : results) {
    for (auto& report : batch) reports.push_back(std::move(report));
  }
  return reports;
}

namespace {

nlohmann::ordered_json quantities_json(const Quantities& q) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  if (q.order) j["order"] = *q.order;
  if (q.size) j["size"] = *q.size;
  if (q.beta) j["beta"] = *q.beta;
  if (q.beta_min) j["beta_min"] = *q.beta_min;
  if (q.beta_max) j["beta_max"] = *q.beta_max;
  if (q.holds) j["holds"] = *q.holds;
  return j;
}

std::string quantities_text(const Quantities& q) {
  std::string out;
  auto add = [&](const char* key, const std::string& value) {
    out += (out.empty() ? "" : " ") + std::string(key) + "=" + value;
  };
  if (q.order) add("order", std::to_string(*q.order));
  if (q.size) add("size", std::to_string(*q.size));
  if (q.beta) add("beta", std::to_string(*q.beta));
  if (q.beta_min || q.beta_max) {
    add("beta", "[" + (q.beta_min ? std::to_string(*q.beta_min) : "") + "," +
                    (q.beta_max ? std::to_string(*q.beta_max) : "") + "]");
  }
  if (q.holds) add("holds", *q.holds ? "yes" : "no");
  return out.empty() ? "-" : out;
}

}  // namespace

std::string report_to_json_line(const TheoremReport& report) {
  nlohmann::ordered_json j;
  j["theorem_id"] = report.theorem_id;
  j["instance"] = report.instance;
  j["expected"] = quantities_json(report.expected);
  j["computed"] = quantities_json(report.computed);
  j["status"] = to_string(report.status);
  if (!report.note.empty()) j["note"] = report.note;
  return j.dump();
}

std::string format_report_table(const std::vector<TheoremReport>& reports) {
  std::vector<std::array<std::string, 6>> rows;
  rows.push_back({"theorem", "instance", "expected", "computed", "status", "note"});
  for (const auto& r : reports) {
    rows.push_back({r.theorem_id, r.instance, quantities_text(r.expected),
                    quantities_text(r.computed), to_string(r.status), r.note});
  }
  std::array<std::size_t, 6> width{};
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < 5; ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < 6; ++c) {
      line += row[c];
      if (c < 5) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

}  // namespace gamedim
