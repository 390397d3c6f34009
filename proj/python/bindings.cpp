#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gamedim/dsl.hpp"
#include "gamedim/dyadic.hpp"
#include "gamedim/errors.hpp"
#include "gamedim/graph_io.hpp"
#include "gamedim/metric.hpp"
#include "gamedim/rulesets.hpp"
#include "gamedim/theorems.hpp"

namespace py = pybind11;
using namespace gamedim;

namespace {

/// Distances as Python ints, with None for infinity.
py::object to_py(ExtendedDistance d) {
  return d.is_infinite() ? py::none() : py::object(py::int_(d.value()));
}

py::list matrix_to_py(const SignedDistanceMatrix& m) {
  py::list rows;
  for (Vertex u = 0; u < m.order(); ++u) {
    py::list row;
    for (Vertex v = 0; v < m.order(); ++v) row.append(to_py(m.at(u, v)));
    rows.append(row);
  }
  return rows;
}

HeapPosition heaps(const std::vector<std::int64_t>& sizes) { return HeapPosition(sizes); }

LandmarkSet landmarks(const GameGraph& g, const std::vector<std::string>& labels) {
  std::vector<Vertex> out;
  for (const auto& label : labels) out.push_back(g.vertex(label));
  return LandmarkSet(std::move(out));
}

std::vector<std::string> names(const GameGraph& g, const LandmarkSet& s) {
  std::vector<std::string> out;
  for (Vertex v : s) out.push_back(g.labels.at(v));
  return out;
}

py::dict quantities(const Quantities& q) {
  py::dict d;
  if (q.order) d["order"] = *q.order;
  if (q.size) d["size"] = *q.size;
  if (q.beta) d["beta"] = *q.beta;
  if (q.beta_min) d["beta_min"] = *q.beta_min;
  if (q.beta_max) d["beta_max"] = *q.beta_max;
  if (q.holds) d["holds"] = *q.holds;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Metric dimension of combinatorial game graphs";

  auto base = py::register_exception<std::runtime_error>(m, "GamedimError");
  py::register_exception<FormatError>(m, "FormatError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<BoundExceeded>(m, "BoundExceeded", base.ptr());
  py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);

  py::class_<GameGraph>(m, "GameGraph")
      .def_property_readonly("name", [](const GameGraph& g) { return g.ruleset_name; })
      .def_property_readonly("labels", [](const GameGraph& g) { return g.labels; })
      .def_property_readonly("directed", [](const GameGraph& g) { return g.graph.is_directed(); })
      .def_property_readonly("order", [](const GameGraph& g) { return g.graph.order(); })
      .def_property_readonly("size", [](const GameGraph& g) { return g.graph.stats().size; })
      .def("edges", [](const GameGraph& g) { return g.graph.edges(); })
      .def("vertex", &GameGraph::vertex, py::arg("label"))
      .def("to_json", &graph_to_json, py::arg("compact") = false)
      .def("to_dot", &graph_to_dot)
      .def_static("from_json", &graph_from_json, py::arg("text"))
      .def("__len__", [](const GameGraph& g) { return g.graph.order(); })
      .def("__repr__", [](const GameGraph& g) {
        return "<GameGraph " + g.ruleset_name + " order=" + std::to_string(g.graph.order()) +
               " size=" + std::to_string(g.graph.stats().size) + ">";
      });

  m.def("nim", [](const std::vector<std::int64_t>& h) { return nim_graph(heaps(h)); }, py::arg("heaps"));
  m.def("hats", [](const std::vector<std::int64_t>& h) { return hats_graph(heaps(h)); }, py::arg("heaps"));
  m.def("kings", &kings_graph, py::arg("rows"), py::arg("cols"));
  m.def("bishops", [](int rows, int cols) { return bishops_game_graph(rows, cols).game; },
        py::arg("rows"), py::arg("cols"));
  m.def("fox_geese", &fox_geese_graph, py::arg("rows"), py::arg("cols"));
  m.def("canonical", [](const std::string& value) {
    return canonical_game_graph(Dyadic::from_rational(Rational::parse(value)));
  }, py::arg("value"));
  m.def("from_dsl", [](const std::string& text) {
    const ParseResult r = parse_ruleset(text);
    if (const auto* d = std::get_if<ParseDiagnostic>(&r)) throw FormatError(d->to_string());
    return build_from_spec(std::get<RulesetSpec>(r));
  }, py::arg("text"), "Build a game graph from ruleset text; syntax errors raise FormatError.");

  m.def("signed_distances", [](const GameGraph& g, unsigned jobs) {
    return matrix_to_py(signed_distance_matrix(g.graph, jobs));
  }, py::arg("graph"), py::arg("jobs") = 1, "Signed distance matrix; None marks infinity.");

  m.def("metric_dimension", [](const GameGraph& g, std::optional<std::size_t> max_k,
                               bool all_bases, unsigned jobs) {
    MetricOptions options;
    options.max_k = max_k;
    options.enumerate_all = all_bases;
    options.jobs = jobs;
    const MetricResult r = metric_dimension_exact(signed_distance_matrix(g.graph, jobs), options);
    py::dict out;
    out["beta"] = r.beta;
    out["basis"] = names(g, r.basis);
    if (r.all_bases) {
      py::list bases;
      for (const auto& s : *r.all_bases) bases.append(names(g, s));
      out["all_bases"] = bases;
    }
    return out;
  }, py::arg("graph"), py::arg("max_k") = py::none(), py::arg("all_bases") = false,
        py::arg("jobs") = 1);

  m.def("greedy_resolving_set", [](const GameGraph& g) {
    return names(g, metric_dimension_greedy(signed_distance_matrix(g.graph)));
  }, py::arg("graph"));

  m.def("is_resolving", [](const GameGraph& g, const std::vector<std::string>& labels) {
    return is_resolving(signed_distance_matrix(g.graph), landmarks(g, labels)).resolving;
  }, py::arg("graph"), py::arg("landmarks"));

  m.def("doubly_resolving_dimension", [](const GameGraph& g) {
    const DoubleResolveResult r = min_doubly_resolving(signed_distance_matrix(g.graph));
    return py::make_tuple(r.psi, names(g, r.witness));
  }, py::arg("graph"));

  m.def("product", [](const GameGraph& a, const GameGraph& b) {
    GameGraph out;
    out.graph = cartesian_product(a.graph, b.graph);
    for (const auto& x : a.labels) {
      for (const auto& y : b.labels) out.labels.push_back("[" + x + ";" + y + "]");
    }
    out.ruleset_name = a.ruleset_name + "x" + b.ruleset_name;
    return out;
  }, py::arg("first"), py::arg("second"));

  m.def("simplest_dyadic", [](const std::string& x, const std::string& y) {
    return simplest_dyadic(Rational::parse(x), Rational::parse(y)).label();
  }, py::arg("x"), py::arg("y"));

  m.def("verify_theorems", [](std::uint64_t max_nim1, std::uint64_t max_nim2, std::uint64_t max_hats,
                              std::uint64_t max_kings, std::uint64_t max_bishops, bool fox_geese,
                              unsigned jobs) {
    VerifyLimits limits{max_nim1, max_nim2, max_hats, max_kings, max_bishops, fox_geese, std::nullopt};
    std::vector<TheoremReport> reports;
    {
      py::gil_scoped_release release;
      reports = verify_all(limits, jobs);
    }
    py::list out;
    for (const auto& r : reports) {
      py::dict d;
      d["theorem_id"] = r.theorem_id;
      d["instance"] = r.instance;
      d["expected"] = quantities(r.expected);
      d["computed"] = quantities(r.computed);
      d["status"] = to_string(r.status);
      d["note"] = r.note;
      out.append(d);
    }
    return out;
  }, py::arg("max_nim1") = 8, py::arg("max_nim2") = 5, py::arg("max_hats") = 7,
        py::arg("max_kings") = 6, py::arg("max_bishops") = 6, py::arg("fox_geese") = true,
        py::arg("jobs") = 0);
}
