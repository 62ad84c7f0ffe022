// drd: compute, verify and check double Roman domination invariants.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "drd/bounds.hpp"
#include "drd/enumerate.hpp"
#include "drd/errors.hpp"
#include "drd/formulas.hpp"
#include "drd/graph.hpp"
#include "drd/graph_io.hpp"
#include "drd/labeling.hpp"
#include "drd/report.hpp"
#include "drd/solvers.hpp"

namespace {

using namespace drd;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct Globals {
  std::string format = "table";
  bool canonical = false;
  unsigned threads = 1;
  std::optional<std::size_t> max_n;
  int max_order = 16;

  SolverCaps caps() const { return max_n ? SolverCaps::uniform(*max_n) : SolverCaps::from_env(); }
};

struct GraphSource {
  std::string family;
  std::string edge_list;
  std::string graph6;

  void attach(CLI::App* app) {
    auto* f = app->add_option("--family", family, "Family spec: path:n cycle:n complete:n kpq:p,q star:m grid2:n trivial:n, "
                                                  "joined with '+' for disjoint unions");
    auto* e = app->add_option("--edge-list", edge_list, "Edge-list file: 'n m' then m lines 'u v' with u < v");
    auto* g = app->add_option("--graph6", graph6, "graph6 string");
    f->excludes(e)->excludes(g);
    e->excludes(g);
  }

  bool given() const { return !family.empty() || !edge_list.empty() || !graph6.empty(); }

  std::string label() const {
    if (!family.empty()) return family;
    if (!edge_list.empty()) return edge_list;
    return graph6;
  }

  json describe() const {
    if (!family.empty()) return {{"family", family}};
    if (!edge_list.empty()) return {{"edge_list", edge_list}};
    return {{"graph6", graph6}};
  }

  Graph load() const {
    if (!family.empty()) return generate(FamilySpec::parse(family)).renamed(family);
    if (!graph6.empty()) return parse_graph(graph6, GraphFormat::graph6).renamed(graph6);
    if (!edge_list.empty()) {
      std::ifstream in(edge_list);
      if (!in) throw InvalidArgument("cannot open edge list '" + edge_list + "'");
      std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      return parse_graph(text, GraphFormat::edge_list).renamed(edge_list);
    }
    throw InvalidArgument("no graph given; use --family, --edge-list or --graph6");
  }
};

// "3", "1..8", "1,3,5" or a mix such as "1..3,7".
std::vector<int> parse_range(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  auto to_int = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw InvalidArgument("bad range '" + text + "'");
    }
  };
  while (std::getline(ss, item, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(to_int(item));
      continue;
    }
    const int lo = to_int(item.substr(0, dots)), hi = to_int(item.substr(dots + 2));
    if (lo > hi) throw InvalidArgument("empty range '" + item + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw InvalidArgument("empty range '" + text + "'");
  return out;
}

json graph_params(const Graph& g) { return {{"graph", g.name()}, {"n", g.order()}, {"m", g.size()}}; }

std::string order_notice(std::size_t order, int max_order) {
  return "order " + std::to_string(order) + " exceeds --max-order " + std::to_string(max_order);
}

// ---- compute ---------------------------------------------------------------

struct ComputeArgs {
  GraphSource source;
  std::string invariant = "gdr";
  bool witness = false;
  bool stats = false;
};

Report run_compute(const ComputeArgs& a, const Globals& gl) {
  const Graph g = a.source.load();
  const Invariant inv = parse_invariant(a.invariant);
  const auto r = solve(g, inv, SolveOptions{gl.canonical, gl.caps()});
  if (witness_value(g, r.witness) != r.value) throw std::logic_error("solver witness does not certify its value");
  Report rep;
  rep.command = "compute";
  rep.inputs = a.source.describe();
  rep.inputs["invariant"] = a.invariant;
  json params = graph_params(g);
  params["invariant"] = to_string(inv);
  rep.results.push_back(solve_row(a.source.label(), params, r, a.witness || gl.canonical, a.stats));
  return rep;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  GraphSource source;
  std::string labeling;
  std::string kind = "drdf";
};

template <class L>
json verdict_row(const Graph& g, const L& f, const Verdict& v) {
  json row;
  row["weight"] = weight(f);
  row["holds"] = v.valid();
  json violations = json::array();
  for (const auto& x : v.violations)
    violations.push_back({{"vertex", x.vertex}, {"condition", condition_tag(x.condition)}});
  row["violations"] = violations;
  row["params"] = graph_params(g);
  return row;
}

template <class L>
L parse_sized(const std::string& text, const Graph& g) {
  L f = L::parse(text);
  if (f.size() != g.order())
    throw InvalidArgument("labeling has " + std::to_string(f.size()) + " values but the graph has " +
                          std::to_string(g.order()) + " vertices");
  return f;
}

Report run_verify(const VerifyArgs& a) {
  const Graph g = a.source.load();
  Report rep;
  rep.command = "verify";
  rep.inputs = a.source.describe();
  rep.inputs["labeling"] = a.labeling;
  rep.inputs["kind"] = a.kind;
  json row;
  if (a.kind == "drdf") {
    const auto f = parse_sized<DRLabeling>(a.labeling, g);
    row = verdict_row(g, f, is_valid_drdf(g, f));
  } else if (a.kind == "rdf") {
    const auto f = parse_sized<RomanLabeling>(a.labeling, g);
    row = verdict_row(g, f, is_valid_rdf(g, f));
  } else if (a.kind == "dominating") {
    std::vector<Vertex> members;
    std::stringstream ss(a.labeling);
    std::string item;
    while (std::getline(ss, item, ','))
      if (item.find_first_not_of(" \t") != std::string::npos) {
        const auto r = parse_range(item);
        if (r.size() != 1 || r[0] < 0) throw InvalidArgument("bad vertex '" + item + "'");
        members.push_back(static_cast<Vertex>(r[0]));
      }
    const VertexSet d(members);
    const bool ok = is_dominating(g, d);
    json undominated = json::array();
    for (Vertex v = 0; v < g.order(); ++v) {
      bool seen = d.contains(v);
      for (Vertex w : g.neighbors(v)) seen = seen || d.contains(w);
      if (!seen) undominated.push_back(v);
    }
    row["params"] = graph_params(g);
    row["size"] = d.size();
    row["holds"] = ok;
    row["undominated"] = undominated;
  } else {
    throw InvalidArgument("unknown kind '" + a.kind + "'; expected drdf, rdf or dominating");
  }
  row["id"] = a.kind;
  row["labeling"] = a.labeling;
  rep.results.push_back(row);
  return rep;
}

// ---- check -----------------------------------------------------------------

struct CheckArgs {
  GraphSource source;
  int nmax = 0;
  bool all_minima = false;
  bool connected_only = false;

  std::string g_spec, h_spec;
  std::vector<std::string> factors;

  std::optional<Vertex> vertex;
  bool all_vertices = false;
  std::string twin_kind = "both";

  std::string corona_n = "1..7";
  int kpq_max = 3;
  std::string corona_h = "path:2";

  std::string grid_n = "1..8";

  long long a = 0, b = 0;
  int scan_nmax = 6;
  bool scan_connected = true;
  std::string expect;
};

void push_bounds(Report& rep, const std::vector<BoundReport>& bs) {
  for (const auto& b : bs) rep.results.push_back(bound_row(b));
}

Report run_fundamental(const CheckArgs& a, const Globals& gl) {
  Report rep;
  rep.command = "check fundamental";
  const auto caps = gl.caps();
  const auto mode = a.all_minima ? PartitionMode::all_minima : PartitionMode::witness_only;
  auto one = [&](const Graph& g) {
    push_bounds(rep, check_fundamental(g, caps));
    push_bounds(rep, check_min_drdf_partition(g, mode, caps));
  };
  if (a.source.given()) {
    rep.inputs = a.source.describe();
    one(a.source.load());
  } else if (a.nmax > 0) {
    rep.inputs = {{"nmax", a.nmax}, {"connected_only", a.connected_only}};
    for (int n = 1; n <= a.nmax; ++n) {
      auto stream = enumerate_labeled_graphs(n);
      while (auto g = stream.next()) {
        if (a.connected_only && !g->is_connected()) continue;
        one(g->renamed(serialize_graph(*g, GraphFormat::graph6)));
      }
    }
  } else {
    throw InvalidArgument("check fundamental needs a graph source or --nmax");
  }
  rep.inputs["all_minima"] = a.all_minima;
  return rep;
}

Report run_cartesian(const CheckArgs& a, const Globals& gl) {
  Report rep;
  rep.command = "check cartesian";
  std::vector<std::pair<std::string, std::string>> pairs;
  if (!a.factors.empty()) {
    rep.inputs = {{"factors", a.factors}};
    for (std::size_t i = 0; i < a.factors.size(); ++i)
      for (std::size_t j = i; j < a.factors.size(); ++j) pairs.emplace_back(a.factors[i], a.factors[j]);
  } else if (!a.g_spec.empty() && !a.h_spec.empty()) {
    rep.inputs = {{"g", a.g_spec}, {"h", a.h_spec}};
    pairs.emplace_back(a.g_spec, a.h_spec);
  } else {
    throw InvalidArgument("check cartesian needs --g and --h, or --factors");
  }
  rep.inputs["max_order"] = gl.max_order;
  for (const auto& [gs, hs] : pairs) {
    const Graph g = generate(FamilySpec::parse(gs)).renamed(gs);
    const Graph h = generate(FamilySpec::parse(hs)).renamed(hs);
    const auto order = g.order() * h.order();
    if (order > static_cast<std::size_t>(gl.max_order)) {
      rep.results.push_back(skipped_row("cartesian", {{"g", gs}, {"h", hs}}, order_notice(order, gl.max_order)));
      continue;
    }
    push_bounds(rep, check_cartesian(g, h, gl.caps()));
  }
  return rep;
}

Report run_twins(const CheckArgs& a, const Globals& gl) {
  Report rep;
  rep.command = "check twins";
  const Graph g = a.source.load();
  rep.inputs = a.source.describe();
  rep.inputs["kind"] = a.twin_kind;
  std::vector<Vertex> us;
  if (a.all_vertices) {
    for (Vertex u = 0; u < g.order(); ++u) us.push_back(u);
  } else if (a.vertex) {
    us.push_back(*a.vertex);
    rep.inputs["vertex"] = *a.vertex;
  } else {
    throw InvalidArgument("check twins needs --vertex or --all-vertices");
  }
  std::vector<TwinKind> kinds;
  if (a.twin_kind == "both" || a.twin_kind == "true") kinds.push_back(TwinKind::true_twin);
  if (a.twin_kind == "both" || a.twin_kind == "false") kinds.push_back(TwinKind::false_twin);
  if (kinds.empty()) throw InvalidArgument("unknown twin kind '" + a.twin_kind + "'; expected true, false or both");
  for (Vertex u : us)
    for (auto k : kinds) {
      json row = bound_row(check_twin(g, u, k, gl.caps()));
      row["vertex"] = u;
      rep.results.push_back(row);
    }
  return rep;
}

void push_formula(Report& rep, const FormulaResult& f, const Globals& gl) {
  if (f.graph.order() > static_cast<std::size_t>(gl.max_order)) {
    json row = formula_row(f, std::nullopt);
    row["skipped"] = order_notice(f.graph.order(), gl.max_order);
    row.erase("holds");
    rep.results.push_back(row);
    return;
  }
  rep.results.push_back(formula_row(f, solve_double_roman(f.graph, SolveOptions{gl.canonical, gl.caps()}).value));
}

Report run_corona(const CheckArgs& a, const Globals& gl) {
  Report rep;
  rep.command = "check corona";
  rep.inputs = {{"n", a.corona_n}, {"kpq_max", a.kpq_max}, {"h", a.corona_h}, {"max_order", gl.max_order}};
  const auto ns = parse_range(a.corona_n);
  const Graph h = generate(FamilySpec::parse(a.corona_h)).renamed(a.corona_h);
  for (int n : ns) {
    if (n < 1) throw InvalidArgument("corona sizes must be >= 1");
    push_formula(rep, gamma_dr_corona_k1(FamilySpec::path(n)), gl);
    if (n >= 3) push_formula(rep, gamma_dr_corona_k1(FamilySpec::cycle(n)), gl);
    push_formula(rep, gamma_dr_corona_k1(FamilySpec::complete(n)), gl);
    if (h.order() >= 2) push_formula(rep, gamma_dr_corona_nontrivial(path_graph(n), h), gl);
    push_formula(rep, gamma_dr_double_corona(path_graph(n)), gl);
  }
  for (int p = 1; p <= a.kpq_max; ++p)
    for (int q = p; q <= a.kpq_max; ++q) push_formula(rep, gamma_dr_corona_k1(FamilySpec::complete_bipartite(p, q)), gl);
  return rep;
}

Report run_grids(const CheckArgs& a, const Globals& gl) {
  Report rep;
  rep.command = "check grids";
  rep.inputs = {{"n", a.grid_n}, {"max_order", gl.max_order}};
  for (int n : parse_range(a.grid_n)) {
    if (n == 2) {
      rep.notices.push_back("grid2:2 skipped: the formula excludes n = 2; the 2x2 grid is C4 with value 4 "
                            "(see the cycle formula)");
      continue;
    }
    push_formula(rep, gamma_dr_grid2(n), gl);
  }
  return rep;
}

Report run_pairs(const CheckArgs& a, const Globals& gl) {
  Report rep;
  rep.command = "check pairs";
  rep.inputs = {{"a", a.a}, {"b", a.b}, {"nmax", a.scan_nmax}, {"connected_only", a.scan_connected}};
  const auto s = scan_pair_realizability(a.a, a.b, a.scan_nmax, a.scan_connected, gl.threads);
  json row = scan_row(s);
  if (!a.expect.empty()) {
    if (a.expect != "none" && a.expect != "found")
      throw InvalidArgument("unknown --expect '" + a.expect + "'; expected none or found");
    rep.inputs["expect"] = a.expect;
    row["holds"] = (a.expect == "found") == s.found.has_value();
  }
  rep.results.push_back(row);
  return rep;
}

// ---- construct -------------------------------------------------------------

struct ConstructArgs {
  std::string spec;
  int n = 0, m = 0;
  int b = 0, i = 0;
  std::string graph_format = "edge_list";
  std::string output;
};

std::optional<FormulaResult> catalog_value(const FamilySpec& spec) {
  try {
    switch (spec.kind) {
      case FamilyKind::cycle: return gamma_dr_cycle(spec.params.at(0));
      case FamilyKind::grid2: return gamma_dr_grid2(spec.params.at(0));
      default: return std::nullopt;
    }
  } catch (const ExcludedCase&) {
    return std::nullopt;
  }
}

Report run_construct(const std::string& target, const ConstructArgs& a, Graph& out_graph) {
  Report rep;
  rep.command = "construct " + target;
  json row;
  row["id"] = target;
  if (target == "family") {
    rep.inputs = {{"spec", a.spec}};
    const auto spec = FamilySpec::parse(a.spec);
    out_graph = generate(spec).renamed(a.spec);
    row["params"] = {{"spec", a.spec}};
    if (auto f = catalog_value(spec)) {
      row["expected_gamma_dr"] = f->value;
      if (f->witness) row["witness"] = f->witness->to_string();
    }
  } else if (target == "corona_realization") {
    rep.inputs = {{"n", a.n}, {"m", a.m}};
    auto r = build_corona_realization(a.n, a.m);
    out_graph = r.graph;
    row["params"] = rep.inputs;
    row["expected_gamma_dr"] = r.expected_gamma_dr;
    row["witness"] = r.witness.to_string();
    row["holds"] = is_valid_drdf(r.graph, r.witness).valid() && weight(r.witness) == r.expected_gamma_dr;
  } else {
    rep.inputs = {{"b", a.b}, {"i", a.i}};
    auto r = build_roman_pair_graph(a.b, a.i);
    out_graph = r.graph;
    row["params"] = rep.inputs;
    row["expected_gamma_r"] = r.expected_gamma_r;
    row["expected_gamma_dr"] = r.expected_gamma_dr;
    row["roman_witness"] = r.roman_witness.to_string();
    row["witness"] = r.double_roman_witness.to_string();
    row["holds"] = is_valid_rdf(r.graph, r.roman_witness).valid() && weight(r.roman_witness) == r.expected_gamma_r &&
                   is_valid_drdf(r.graph, r.double_roman_witness).valid() &&
                   weight(r.double_roman_witness) == r.expected_gamma_dr;
  }
  row["n"] = out_graph.order();
  row["m"] = out_graph.size();
  rep.inputs["format"] = a.graph_format;
  rep.results.push_back(row);
  return rep;
}

int exit_code(const Report& r) {
  switch (r.status()) {
    case Status::ok: return kExitOk;
    case Status::violation: return kExitViolation;
    case Status::error: return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact double Roman domination: compute invariants, verify labelings, check bounds and scan pairs."};
  app.name("drd");
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough();

  Globals gl;
  app.add_option("--format", gl.format, "Report format")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_flag("--canonical", gl.canonical, "Lexicographically least optimal witnesses; elapsed_ms is reported as 0");
  app.add_option("--threads", gl.threads, "Worker threads for pair scans")->check(CLI::Range(1u, 256u));
  app.add_option("--max-n", gl.max_n, "Override every solver size cap (also DRD_MAX_N)")
      ->check(CLI::Range(std::size_t{1}, kMaxSolverOrder));
  app.add_option("--max-order", gl.max_order, "Largest instance order a check suite will solve; larger rows are skipped")
      ->check(CLI::PositiveNumber);

  ComputeArgs compute_args;
  auto* compute = app.add_subcommand("compute", "Compute gamma, gamma_R or gamma_dR exactly");
  compute_args.source.attach(compute);
  compute->add_option("--invariant", compute_args.invariant, "gamma | gr | gdr")
      ->check(CLI::IsMember({"gamma", "gr", "gdr"}));
  compute->add_flag("--witness", compute_args.witness, "Print the witness");
  compute->add_flag("--stats", compute_args.stats, "Print search statistics");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check a labeling or vertex set against a graph");
  verify_args.source.attach(verify);
  verify->add_option("--labeling", verify_args.labeling, "Comma-separated values, or vertex indices for dominating")
      ->required();
  verify->add_option("--kind", verify_args.kind, "drdf | rdf | dominating")
      ->check(CLI::IsMember({"drdf", "rdf", "dominating"}));

  CheckArgs ck;
  auto* check = app.add_subcommand("check", "Run a bound or formula suite");
  check->require_subcommand(1);
  check->fallthrough();

  auto* fundamental = check->add_subcommand("fundamental", "2g <= gdr <= 3g, gr < gdr < 2gr and the minimum-DRDF partition bounds");
  ck.source.attach(fundamental);
  fundamental->add_option("--nmax", ck.nmax, "Sweep every labeled graph with 1..nmax vertices")->check(CLI::Range(1, 7));
  fundamental->add_flag("--all-minima", ck.all_minima, "Check the partition bounds on every minimum DRDF");
  fundamental->add_flag("--connected-only", ck.connected_only, "Restrict the sweep to connected graphs");

  auto* cartesian = check->add_subcommand("cartesian", "Lower and upper bounds for G box H");
  cartesian->add_option("--g", ck.g_spec, "First factor family spec");
  cartesian->add_option("--h", ck.h_spec, "Second factor family spec");
  cartesian->add_option("--factors", ck.factors, "Check every unordered pair (with repetition) of these family specs");

  auto* twins = check->add_subcommand("twins", "Twin sandwiches gdr(G) <= gdr(H) <= gdr(G) + 1 or + 2");
  ck.source.attach(twins);
  twins->add_option("--vertex", ck.vertex, "Vertex to twin");
  twins->add_flag("--all-vertices", ck.all_vertices, "Twin every vertex in turn");
  twins->add_option("--kind", ck.twin_kind, "true | false | both")->check(CLI::IsMember({"true", "false", "both"}));

  auto* corona_cmd = check->add_subcommand("corona", "Corona formulas against the solver");
  corona_cmd->add_option("--n", ck.corona_n, "Base orders, e.g. 1..7");
  corona_cmd->add_option("--kpq-max", ck.kpq_max, "Complete bipartite bases K_{p,q} with p <= q <= this");
  corona_cmd->add_option("--h", ck.corona_h, "Family spec of H for the nontrivial corona rows");

  auto* grids = check->add_subcommand("grids", "2 x n grid formula against the solver");
  grids->add_option("--n", ck.grid_n, "Grid lengths, e.g. 1..8");

  auto* pairs = check->add_subcommand("pairs", "Scan labeled graphs for (gamma_R, gamma_dR) = (a, b)");
  pairs->add_option("--a", ck.a, "Target gamma_R")->required();
  pairs->add_option("--b", ck.b, "Target gamma_dR")->required();
  pairs->add_option("--nmax", ck.scan_nmax, "Largest order scanned")->check(CLI::Range(1, kMaxEnumerationOrder));
  pairs->add_flag("--connected-only,!--all-graphs", ck.scan_connected, "Only connected graphs (default)");
  pairs->add_option("--expect", ck.expect, "none | found; turns the scan into a pass/fail check");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Write a family or realization graph");
  construct->require_subcommand(1);
  construct->fallthrough();
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", ca.graph_format, "edge_list | graph6")->check(CLI::IsMember({"edge_list", "graph6"}));
    sub->add_option("--output", ca.output, "Write the graph to FILE and the expected values to FILE.json");
  };
  auto* c_family = construct->add_subcommand("family", "Graph from a family spec");
  c_family->add_option("--spec", ca.spec, "Family spec")->required();
  add_output(c_family);
  auto* c_corona = construct->add_subcommand("corona_realization", "(K_{1,m} + (n-m-1)K1) corona K1, value 3n - m");
  c_corona->add_option("--n", ca.n, "n")->required();
  c_corona->add_option("--m", ca.m, "m")->required();
  add_output(c_corona);
  auto* c_pair = construct->add_subcommand("roman_pair", "Bipartite graph with (gamma_R, gamma_dR) = (floor(b/2) + i, b)");
  c_pair->add_option("--b", ca.b, "b")->required();
  c_pair->add_option("--i", ca.i, "i")->required();
  add_output(c_pair);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  const auto defaults = SolverCaps::defaults();
  if (gl.max_n && *gl.max_n > defaults.brute_force_full)
    std::cerr << "drd: warning: --max-n " << *gl.max_n
              << " lifts the default caps (branch-and-bound 30, brute force 12/8, minima 10); large searches may not "
                 "finish\n";

  OutputFormat format = parse_output_format(gl.format);
  const auto start = std::chrono::steady_clock::now();
  Report rep;
  try {
    if (*compute) {
      rep = run_compute(compute_args, gl);
    } else if (*verify) {
      rep = run_verify(verify_args);
    } else if (*check) {
      if (*fundamental) rep = run_fundamental(ck, gl);
      else if (*cartesian) rep = run_cartesian(ck, gl);
      else if (*twins) rep = run_twins(ck, gl);
      else if (*corona_cmd) rep = run_corona(ck, gl);
      else if (*grids) rep = run_grids(ck, gl);
      else rep = run_pairs(ck, gl);
    } else {
      const std::string target = *c_family ? "family" : *c_corona ? "corona_realization" : "roman_pair";
      Graph g(1);
      rep = run_construct(target, ca, g);
      const auto text = serialize_graph(g, parse_graph_format(ca.graph_format));
      const auto sidecar = rep.to_json().dump(2) + "\n";
      if (ca.output.empty()) {
        std::cout << text << (text.ends_with('\n') ? "" : "\n");
        std::cerr << sidecar;
      } else {
        std::ofstream(ca.output) << text << (text.ends_with('\n') ? "" : "\n");
        std::ofstream(ca.output + ".json") << sidecar;
      }
      return exit_code(rep);
    }
  } catch (const drd::Error& e) {
    std::cerr << "drd: error: " << e.what() << "\n";
    if (format == OutputFormat::json) {
      Report err;
      err.command = app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name();
      err.error = e.what();
      std::cout << err.render(format);
    }
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "drd: internal error: " << e.what() << "\n";
    return kExitInternal;
  }

  if (!gl.canonical)
    rep.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  std::cout << rep.render(format);
  return exit_code(rep);
}
