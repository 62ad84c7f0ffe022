#include "drd/formulas.hpp"

#include <string>

#include "drd/errors.hpp"

namespace drd {

namespace {

DRLabeling zeros(std::size_t n) { return DRLabeling::constant(n, 0); }

// V2-free minimum labeling of a path or cycle on n vertices: 3 at 1-based
// positions 2, 5, 8, ... plus a final 3 at n (n = 3k+1) or n-1 (n = 3k+2).
std::vector<Vertex> path_threes(int n) {
  std::vector<Vertex> out;
  const int k = n / 3;
  for (int t = 0; t < k; ++t) out.push_back(static_cast<Vertex>(3 * t + 1));
  if (n % 3 == 1) out.push_back(static_cast<Vertex>(n - 1));
  if (n % 3 == 2) out.push_back(static_cast<Vertex>(n - 2));
  return out;
}

long long comb_value(int n) {
  switch (n % 3) {
    case 0: return 7LL * n / 3;
    case 1: return (7LL * n + 2) / 3;
    default: return (7LL * n + 1) / 3;
  }
}

}  // namespace

FormulaResult gamma_dr_cycle(int n) {
  if (n < 3) throw InvalidSpec("cycle formula requires n >= 3");
  const int r = n % 6;
  FormulaResult out;
  out.family = "cycle";
  out.params = {n};
  out.value = (r == 1 || r == 5) ? n + 1 : n;
  out.theorem = "cycle";
  out.graph = cycle_graph(n);
  return out;
}

FormulaResult gamma_dr_grid2(int n) {
  if (n < 1) throw InvalidSpec("grid2 formula requires n >= 1");
  if (n == 2) throw ExcludedCase("grid2 formula excludes n = 2; the 2x2 grid is C4, use gamma_dr_cycle(4)");
  FormulaResult out;
  out.family = "grid2";
  out.params = {n};
  out.value = (3LL * n + 4) / 2;
  out.theorem = "grid2";
  out.graph = grid2_graph(n);

  DRLabeling f = zeros(2 * static_cast<std::size_t>(n));
  auto at = [n](int row, int col) { return static_cast<std::size_t>((row - 1) * n + (col - 1)); };
  const bool even = n % 2 == 0;
  auto in_range = [&](int col) { return even ? col < n : col <= n; };
  for (int col = 3; in_range(col); col += 4) f.set(at(1, col), 3);
  for (int col = 1; in_range(col); col += 4) f.set(at(2, col), 3);
  if (even) f.set(n % 4 == 2 ? at(1, n) : at(2, n), 2);
  out.witness = std::move(f);
  return out;
}

FormulaResult gamma_dr_corona_nontrivial(const Graph& g, const Graph& h) {
  if (h.order() == 1) throw ExcludedCase("corona with K1 has its own formulas; see gamma_dr_corona_k1");
  FormulaResult out;
  out.family = "corona";
  out.params = {static_cast<int>(g.order()), static_cast<int>(h.order())};
  out.value = 3 * static_cast<long long>(g.order());
  out.theorem = "corona";
  out.graph = corona(g, h);
  DRLabeling f = zeros(out.graph.order());
  for (Vertex v = 0; v < g.order(); ++v) f.set(v, 3);
  out.witness = std::move(f);
  return out;
}

FormulaResult gamma_dr_corona_k1(const FamilySpec& family) {
  const Graph base = generate(family);
  const int n = static_cast<int>(base.order());
  FormulaResult out;
  out.params = family.params;
  out.graph = corona(base, Graph(1, "K1"));
  DRLabeling f = zeros(out.graph.order());
  auto leaf = [n](int i) { return static_cast<std::size_t>(n + i); };

  switch (family.kind) {
    case FamilyKind::path:
    case FamilyKind::cycle: {
      const bool is_path = family.kind == FamilyKind::path;
      out.family = is_path ? "corona_k1_path" : "corona_k1_cycle";
      out.theorem = out.family;
      out.value = comb_value(n);
      std::vector<char> three(n, 0);
      for (Vertex v : path_threes(n)) three[v] = 1;
      for (int i = 0; i < n; ++i) {
        if (three[i])
          f.set(i, 3);
        else
          f.set(leaf(i), 2);
      }
      break;
    }
    case FamilyKind::complete: {
      out.family = "corona_k1_complete";
      out.theorem = out.family;
      out.value = 2LL * n + 1;
      f.set(0, 3);
      for (int i = 1; i < n; ++i) f.set(leaf(i), 2);
      break;
    }
    case FamilyKind::complete_bipartite: {
      const int p = family.params[0];
      const int q = family.params[1];
      out.family = "corona_k1_kpq";
      out.theorem = out.family;
      if (p == 1 || q == 1) {
        out.value = 2LL * (p + q) + 1;
        // The side of size one hosts the 3; every other leaf gets 2.
        const int hub = p == 1 ? 0 : p;
        f.set(hub, 3);
        for (int i = 0; i < n; ++i)
          if (i != hub) f.set(leaf(i), 2);
      } else {
        out.value = 2LL * (p + q + 1);
        f.set(0, 3);
        f.set(p, 3);
        for (int i = 1; i < p; ++i) f.set(leaf(i), 2);
        for (int j = 1; j < q; ++j) f.set(leaf(p + j), 2);
      }
      break;
    }
    default:
      throw InvalidSpec("no corona-K1 formula for family '" + family.to_string() + "'");
  }
  out.witness = std::move(f);
  return out;
}

FormulaResult gamma_dr_double_corona(const Graph& g) {
  const Graph k1(1, "K1");
  const auto n = static_cast<Vertex>(g.order());
  FormulaResult out;
  out.family = "double_corona";
  out.params = {static_cast<int>(n)};
  out.value = 5LL * n;
  out.theorem = "double_corona";
  out.graph = corona(corona(g, k1), k1);
  DRLabeling f = zeros(out.graph.order());
  for (Vertex i = 0; i < n; ++i) {
    f.set(i, 3);          // original vertex
    f.set(3 * n + i, 2);  // outer pendant
  }
  out.witness = std::move(f);
  return out;
}

}  // namespace drd
