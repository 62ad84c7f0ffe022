// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "drd/bounds.hpp"
#include "drd/enumerate.hpp"
#include "drd/formulas.hpp"
#include "drd/graph.hpp"
#include "drd/labeling.hpp"
#include "drd/solvers.hpp"
#include "oracle.hpp"

using namespace drd;

namespace {

struct Outcome {
  bool pass = true;
  long long checked = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok && pass) first_failure = what;
    pass = pass && ok;
  }
};

const SolverCaps kCaps = SolverCaps::defaults();
const SolveOptions kOpts{false, kCaps};

long long gdr(const Graph& g) { return solve_double_roman(g, kOpts).value; }

template <class Fn>
void for_each_graph(int n_max, bool connected_only, Fn fn) {
  for (int n = 1; n <= n_max; ++n) {
    auto stream = enumerate_labeled_graphs(n);
    while (auto g = stream.next())
      if (!connected_only || g->is_connected()) fn(*g);
  }
}

std::string g6ish(const Graph& g) {
  std::string s = std::to_string(g.order()) + ":";
  for (auto [u, v] : g.edges()) s += " " + std::to_string(u) + "-" + std::to_string(v);
  return s;
}

void check_formula(Outcome& o, const FormulaResult& f) {
  const long long solved = gdr(f.graph);
  o.expect(solved == f.value, f.family + " value " + std::to_string(f.value) + " vs solver " + std::to_string(solved));
  if (f.witness)
    o.expect(is_valid_drdf(f.graph, *f.witness).valid() && weight(*f.witness) == f.value,
             f.family + " witness " + f.witness->to_string());
}

Outcome cycles() {
  Outcome o;
  for (int n = 3; n <= 14; ++n) {
    const auto f = gamma_dr_cycle(n);
    const long long want = (n % 6 == 1 || n % 6 == 5) ? n + 1 : n;
    o.expect(f.value == want, "formula C" + std::to_string(n));
    o.expect(gdr(cycle_graph(n)) == want, "solver C" + std::to_string(n));
  }
  return o;
}

Outcome grids() {
  Outcome o;
  for (int n : {1, 3, 4, 5, 6, 7, 8}) {
    const auto f = gamma_dr_grid2(n);
    o.expect(f.value == (3 * n + 4) / 2, "grid formula n=" + std::to_string(n));
    check_formula(o, f);
  }
  o.expect(gdr(grid2_graph(2)) == 4 && gamma_dr_cycle(4).value == 4, "G_{2,2} = C4 = 4");
  return o;
}

Outcome coronas() {
  Outcome o;
  for (int n = 1; n <= 7; ++n) {
    check_formula(o, gamma_dr_corona_k1(FamilySpec::path(n)));
    check_formula(o, gamma_dr_corona_k1(FamilySpec::complete(n)));
    if (n >= 3) check_formula(o, gamma_dr_corona_k1(FamilySpec::cycle(n)));
  }
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q) check_formula(o, gamma_dr_corona_k1(FamilySpec::complete_bipartite(p, q)));

  std::mt19937_64 rng(2024);
  for (int k = 0; k < 10; ++k) {
    const int n1 = std::uniform_int_distribution<int>(1, 5)(rng);
    const int n2 = std::uniform_int_distribution<int>(2, 15 / n1 - 1)(rng);
    const Graph g = testgen::random_graph(rng, n1);
    const Graph h = testgen::random_graph(rng, n2);
    check_formula(o, gamma_dr_corona_nontrivial(g, h));
  }

  for_each_graph(3, false, [&](const Graph& g) { check_formula(o, gamma_dr_double_corona(g)); });
  for (int k = 0; k < 5; ++k) check_formula(o, gamma_dr_double_corona(testgen::random_graph(rng, 4)));
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  auto compare = [&](const Graph& g) {
    o.expect(solve_domination(g, kOpts).value == brute_force(g, Invariant::domination, SearchSpace::full, kCaps).value,
             "gamma " + g6ish(g));
    o.expect(solve_roman(g, kOpts).value == brute_force(g, Invariant::roman, SearchSpace::full, kCaps).value,
             "gamma_R " + g6ish(g));
    o.expect(gdr(g) == brute_force(g, Invariant::double_roman, SearchSpace::full, kCaps).value, "gamma_dR " + g6ish(g));
  };
  for_each_graph(5, false, compare);
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> order(6, 8);
  for (int k = 0; k < 100; ++k) compare(testgen::random_graph(rng, order(rng)));
  return o;
}

Outcome no_ones() {
  Outcome o;
  for_each_graph(5, false, [&](const Graph& g) {
    o.expect(brute_force(g, Invariant::double_roman, SearchSpace::full, kCaps).value ==
                 brute_force(g, Invariant::double_roman, SearchSpace::reduced, kCaps).value,
             "full vs reduced " + g6ish(g));
  });

  // 1000 valid DRDFs that contain at least one 1, by rejection sampling.
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> order(2, 8);
  std::discrete_distribution<int> value({3, 3, 2, 2});
  int sampled = 0;
  while (sampled < 1000) {
    const Graph g = testgen::random_graph(rng, order(rng));
    std::vector<std::uint8_t> v(g.order());
    bool one = false;
    for (auto& x : v) {
      x = static_cast<std::uint8_t>(value(rng));
      one = one || x == 1;
    }
    const DRLabeling f(v);
    if (!one || !is_valid_drdf(g, f).valid()) continue;
    ++sampled;
    const DRLabeling e = eliminate_ones(g, f);
    o.expect(weight(e) <= weight(f) && partition(e)[1].empty() && is_valid_drdf(g, e).valid(),
             "eliminate_ones " + g6ish(g) + " f=" + f.to_string());
  }
  return o;
}

Outcome sandwiches() {
  Outcome o;
  for_each_graph(5, false, [&](const Graph& g) {
    for (const auto& b : check_fundamental(g, kCaps))
      if (!b.skipped) o.expect(b.holds, b.bound_id + " " + g6ish(g));
    if (g.is_connected())
      for (const auto& b : check_min_drdf_partition(g, PartitionMode::all_minima, kCaps))
        o.expect(b.holds, b.bound_id + " " + g6ish(g) + " " + b.context);
  });
  return o;
}

Outcome cartesian() {
  Outcome o;
  const std::vector<Graph> factors{path_graph(2), path_graph(3), path_graph(4),
                                   cycle_graph(3), cycle_graph(4), complete_graph(3)};
  const std::set<std::string> listed{"cartesian_lower_gamma_g", "cartesian_lower_gamma_h", "cartesian_lower_product",
                                     "cartesian_upper"};
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i; j < factors.size(); ++j) {
      if (factors[i].order() * factors[j].order() > 16) continue;
      for (const auto& b : check_cartesian(factors[i], factors[j], kCaps))
        if (listed.count(b.bound_id)) o.expect(b.holds, b.bound_id + " " + b.context);
    }
  return o;
}

Outcome twins() {
  Outcome o;
  auto all_vertices = [&](const Graph& g) {
    for (Vertex u = 0; u < g.order(); ++u)
      for (auto kind : {TwinKind::true_twin, TwinKind::false_twin}) {
        const auto b = check_twin(g, u, kind, kCaps);
        o.expect(b.holds, b.bound_id + " " + g6ish(g) + " u=" + std::to_string(u));
      }
  };
  for_each_graph(5, true, all_vertices);
  std::mt19937_64 rng(8);
  for (int k = 0; k < 50; ++k) all_vertices(testgen::random_connected_graph(rng, 6));
  return o;
}

Outcome realizations() {
  Outcome o;
  for (int n = 1; n <= 5; ++n)
    for (int m = 0; m <= n - 1; ++m) {
      const auto r = build_corona_realization(n, m);
      o.expect(r.expected_gamma_dr == 3 * n - m && gdr(r.graph) == 3 * n - m,
               "corona realization n=" + std::to_string(n) + " m=" + std::to_string(m));
    }
  for (int b = 4; b <= 8; ++b)
    for (int i = 1; i <= b / 2 - 1; ++i) {
      const auto r = build_roman_pair_graph(b, i);
      if (r.graph.order() > 16) continue;
      const auto gr = solve_roman(r.graph, kOpts).value;
      const auto d = gdr(r.graph);
      o.expect(gr == r.expected_gamma_r && d == r.expected_gamma_dr,
               "roman pair b=" + std::to_string(b) + " i=" + std::to_string(i) + ": got (" + std::to_string(gr) +
                   "," + std::to_string(d) + ")");
    }
  return o;
}

Outcome scans() {
  Outcome o;
  const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  o.expect(!scan_pair_realizability(4, 5, 6, true, threads).found, "(4,5) realized");
  o.expect(!scan_pair_realizability(2, 4, 6, true, threads).found, "(2,4) realized");
  o.expect(scan_pair_realizability(2, 3, 6, true, threads).found.has_value(), "(2,3) not found");
  return o;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "cycle formula, n = 3..14", cycles},
      {2, "2 x n grid formula and witnesses", grids},
      {3, "corona formulas and witnesses", coronas},
      {4, "branch-and-bound equals brute force", oracle_equivalence},
      {5, "no 1s needed; eliminate_ones never adds weight", no_ones},
      {6, "dominating, Roman and partition sandwiches", sandwiches},
      {7, "cartesian product bounds", cartesian},
      {8, "twin sandwiches", twins},
      {9, "realization constructions", realizations},
      {10, "pair scans (4,5), (2,4), (2,3)", scans},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.first_failure = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %2d: %s (%lld checks, %.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.checked,
                secs, o.pass ? "" : " first failure: ", o.pass ? "" : o.first_failure.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
