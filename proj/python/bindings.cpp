#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "drd/bounds.hpp"
#include "drd/errors.hpp"
#include "drd/formulas.hpp"
#include "drd/graph.hpp"
#include "drd/graph_io.hpp"
#include "drd/labeling.hpp"
#include "drd/solvers.hpp"

namespace py = pybind11;
using namespace drd;

namespace {

template <int M>
std::vector<int> to_list(const Labeling<M>& f) {
  return {f.values().begin(), f.values().end()};
}

template <int M>
Labeling<M> from_list(const std::vector<int>& values) {
  Labeling<M> f = Labeling<M>::constant(values.size(), 0);
  for (std::size_t i = 0; i < values.size(); ++i) f.set(i, values[i]);
  return f;
}

std::vector<int> witness_list(const Witness& w) {
  if (const auto* s = std::get_if<VertexSet>(&w)) return {s->begin(), s->end()};
  if (const auto* r = std::get_if<RomanLabeling>(&w)) return to_list(*r);
  return to_list(std::get<DRLabeling>(w));
}

SolverCaps caps_for(std::optional<std::size_t> max_n) {
  return max_n ? SolverCaps::uniform(*max_n) : SolverCaps::from_env();
}

py::dict solve_dict(const SolveResult& r) {
  py::dict d;
  d["value"] = r.value;
  d["witness"] = witness_list(r.witness);
  d["nodes_explored"] = r.nodes_explored;
  d["method"] = std::string(to_string(r.method));
  return d;
}

py::dict bound_dict(const BoundReport& b) {
  py::dict d;
  d["id"] = b.bound_id;
  d["context"] = b.context;
  if (b.skipped) {
    d["skipped"] = *b.skipped;
    return d;
  }
  d["lhs"] = b.lhs;
  d["relation"] = std::string(to_string(b.relation));
  d["rhs"] = b.rhs;
  if (b.rhs_upper) d["rhs_upper"] = *b.rhs_upper;
  d["holds"] = b.holds;
  if (!b.note.empty()) d["note"] = b.note;
  return d;
}

py::list bound_list(const std::vector<BoundReport>& rows) {
  py::list out;
  for (const auto& b : rows) out.append(bound_dict(b));
  return out;
}

py::dict formula_dict(const FormulaResult& f) {
  py::dict d;
  d["family"] = f.family;
  d["params"] = f.params;
  d["value"] = f.value;
  d["witness"] = f.witness ? py::cast(to_list(*f.witness)) : py::none();
  d["graph"] = f.graph;
  return d;
}

}  // namespace

PYBIND11_MODULE(_drd, m) {
  m.doc() = "Exact double Roman, Roman and ordinary domination numbers of small graphs";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidSpec>(m, "InvalidSpec", base.ptr());
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ResourceLimit>(m, "ResourceLimit", base.ptr());
  py::register_exception<ExcludedCase>(m, "ExcludedCase", base.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges, std::string name) {
             return Graph(n, std::span<const Edge>(edges), std::move(name));
           }),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<Vertex, Vertex>>{}, py::arg("name") = "")
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("name", &Graph::name)
      .def("neighbors", [](const Graph& g, Vertex v) {
        auto ns = g.neighbors(v);
        return std::vector<Vertex>(ns.begin(), ns.end());
      })
      .def("degree", &Graph::degree)
      .def("adjacent", &Graph::adjacent)
      .def("edges", &Graph::edges)
      .def("max_degree", &Graph::max_degree)
      .def("is_connected", &Graph::is_connected)
      .def("__len__", &Graph::order)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(" + std::to_string(g.order()) + " vertices, " + std::to_string(g.size()) + " edges" +
               (g.name().empty() ? "" : ", '" + g.name() + "'") + ")";
      });

  m.def("family", [](const std::string& spec) { return generate(FamilySpec::parse(spec)); }, py::arg("spec"),
        "Graph from a family spec such as 'cycle:7', 'kpq:2,3' or 'star:2+trivial:1'.");
  m.def("path", &path_graph);
  m.def("cycle", &cycle_graph);
  m.def("complete", &complete_graph);
  m.def("complete_bipartite", &complete_bipartite_graph);
  m.def("star", &star_graph);
  m.def("grid2", &grid2_graph);
  m.def("trivial", &trivial_graph);
  m.def("cartesian_product", &cartesian_product);
  m.def("corona", &corona);
  m.def("add_true_twin", &add_true_twin);
  m.def("add_false_twin", &add_false_twin);
  m.def("disjoint_union", &disjoint_union);

  m.def("parse_graph6", [](const std::string& s) { return parse_graph(s, GraphFormat::graph6); });
  m.def("to_graph6", [](const Graph& g) { return serialize_graph(g, GraphFormat::graph6); });
  m.def("parse_edge_list", [](const std::string& s) { return parse_graph(s, GraphFormat::edge_list); });
  m.def("to_edge_list", [](const Graph& g) { return serialize_graph(g, GraphFormat::edge_list); });

  m.def(
      "solve",
      [](const Graph& g, const std::string& invariant, bool canonical, std::optional<std::size_t> max_n) {
        const SolveOptions opts{canonical, caps_for(max_n)};
        SolveResult r;
        {
          py::gil_scoped_release unlocked;
          r = solve(g, parse_invariant(invariant), opts);
        }
        return solve_dict(r);
      },
      py::arg("g"), py::arg("invariant") = "gdr", py::arg("canonical") = false, py::arg("max_n") = py::none());
  for (auto [name, inv] : {std::pair{"gamma", Invariant::domination}, std::pair{"gamma_r", Invariant::roman},
                           std::pair{"gamma_dr", Invariant::double_roman}}) {
    m.def(
        name,
        [inv](const Graph& g, std::optional<std::size_t> max_n) {
          return solve(g, inv, SolveOptions{false, caps_for(max_n)}).value;
        },
        py::arg("g"), py::arg("max_n") = py::none(), py::call_guard<py::gil_scoped_release>());
  }
  m.def(
      "brute_force",
      [](const Graph& g, const std::string& invariant, bool full) {
        return solve_dict(brute_force(g, parse_invariant(invariant), full ? SearchSpace::full : SearchSpace::reduced));
      },
      py::arg("g"), py::arg("invariant") = "gdr", py::arg("full") = false);
  m.def(
      "min_drdfs",
      [](const Graph& g, bool full) {
        std::vector<std::vector<int>> out;
        for (const auto& f : enumerate_min_drdfs(g, full ? SearchSpace::full : SearchSpace::reduced))
          out.push_back(to_list(f));
        return out;
      },
      py::arg("g"), py::arg("full") = false);
  m.def("greedy_dominating_set", [](const Graph& g) {
    auto s = greedy_dominating_set(g);
    return std::vector<Vertex>(s.begin(), s.end());
  });

  m.def("is_drdf", [](const Graph& g, const std::vector<int>& f) { return is_valid_drdf(g, from_list<3>(f)).valid(); });
  m.def("is_rdf", [](const Graph& g, const std::vector<int>& f) { return is_valid_rdf(g, from_list<2>(f)).valid(); });
  m.def("is_dominating", [](const Graph& g, const std::vector<Vertex>& d) { return is_dominating(g, VertexSet(d)); });
  m.def("drdf_violations", [](const Graph& g, const std::vector<int>& f) {
    std::vector<std::pair<Vertex, std::string>> out;
    for (const auto& v : is_valid_drdf(g, from_list<3>(f)).violations)
      out.emplace_back(v.vertex, std::string(condition_tag(v.condition)));
    return out;
  });
  m.def("eliminate_ones",
        [](const Graph& g, const std::vector<int>& f) { return to_list(eliminate_ones(g, from_list<3>(f))); });

  m.def("gamma_dr_cycle", [](int n) { return formula_dict(gamma_dr_cycle(n)); });
  m.def("gamma_dr_grid2", [](int n) { return formula_dict(gamma_dr_grid2(n)); });
  m.def("gamma_dr_corona_nontrivial",
        [](const Graph& g, const Graph& h) { return formula_dict(gamma_dr_corona_nontrivial(g, h)); });
  m.def("gamma_dr_corona_k1",
        [](const std::string& spec) { return formula_dict(gamma_dr_corona_k1(FamilySpec::parse(spec))); });
  m.def("gamma_dr_double_corona", [](const Graph& g) { return formula_dict(gamma_dr_double_corona(g)); });

  m.def("check_fundamental", [](const Graph& g) { return bound_list(check_fundamental(g)); });
  m.def(
      "check_partition",
      [](const Graph& g, bool all_minima) {
        return bound_list(
            check_min_drdf_partition(g, all_minima ? PartitionMode::all_minima : PartitionMode::witness_only));
      },
      py::arg("g"), py::arg("all_minima") = false);
  m.def("check_cartesian", [](const Graph& g, const Graph& h) { return bound_list(check_cartesian(g, h)); });
  m.def(
      "check_twin",
      [](const Graph& g, Vertex u, const std::string& kind) {
        if (kind != "true" && kind != "false") throw InvalidArgument("twin kind must be 'true' or 'false'");
        return bound_dict(check_twin(g, u, kind == "true" ? TwinKind::true_twin : TwinKind::false_twin));
      },
      py::arg("g"), py::arg("u"), py::arg("kind") = "true");

  m.def("corona_realization", [](int n, int mm) {
    auto r = build_corona_realization(n, mm);
    return py::make_tuple(r.graph, r.expected_gamma_dr, to_list(r.witness));
  });
  m.def("roman_pair", [](int b, int i) {
    auto r = build_roman_pair_graph(b, i);
    return py::make_tuple(r.graph, r.expected_gamma_r, r.expected_gamma_dr);
  });
  m.def(
      "scan_pair",
      [](long long a, long long b, int n_max, bool connected_only, unsigned threads) {
        PairScanResult r;
        {
          py::gil_scoped_release unlocked;
          r = scan_pair_realizability(a, b, n_max, connected_only, threads);
        }
        py::dict d;
        d["found"] = r.found ? py::cast(*r.found) : py::none();
        d["graphs_scanned"] = r.graphs_scanned;
        return d;
      },
      py::arg("a"), py::arg("b"), py::arg("n_max"), py::arg("connected_only") = true, py::arg("threads") = 1);
}
