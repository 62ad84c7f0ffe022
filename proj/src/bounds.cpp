#include "drd/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

#include "drd/enumerate.hpp"
#include "drd/errors.hpp"

namespace drd {

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::le: return "<=";
    case Relation::lt: return "<";
    case Relation::ge: return ">=";
    case Relation::gt: return ">";
    case Relation::within: return "within";
    case Relation::strictly_within: return "strictly_within";
  }
  return "?";
}

bool evaluate(Relation r, long long lhs, long long rhs, std::optional<long long> rhs_upper) {
  switch (r) {
    case Relation::le: return lhs <= rhs;
    case Relation::lt: return lhs < rhs;
    case Relation::ge: return lhs >= rhs;
    case Relation::gt: return lhs > rhs;
    case Relation::within: return rhs_upper && rhs <= lhs && lhs <= *rhs_upper;
    case Relation::strictly_within: return rhs_upper && rhs < lhs && lhs < *rhs_upper;
  }
  return false;
}

BoundReport BoundReport::make(std::string id, long long lhs, Relation rel, long long rhs,
                              std::optional<long long> rhs_upper, std::string context) {
  BoundReport r;
  r.bound_id = std::move(id);
  r.lhs = lhs;
  r.rhs = rhs;
  r.rhs_upper = rhs_upper;
  r.relation = rel;
  r.holds = evaluate(rel, lhs, rhs, rhs_upper);
  r.context = std::move(context);
  return r;
}

BoundReport BoundReport::skip(std::string id, std::string context, std::string reason) {
  BoundReport r;
  r.bound_id = std::move(id);
  r.context = std::move(context);
  r.skipped = std::move(reason);
  return r;
}

namespace {

SolveOptions options_for(const SolverCaps& caps) {
  SolveOptions opts;
  opts.caps = caps;
  return opts;
}

std::string label(const Graph& g) {
  return g.name().empty() ? std::to_string(g.order()) + "-vertex graph" : g.name();
}

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

}  // namespace

std::vector<BoundReport> check_fundamental(const Graph& g, const SolverCaps& caps) {
  const auto opts = options_for(caps);
  const long long gamma = solve_domination(g, opts).value;
  const long long gdr = solve_double_roman(g, opts).value;
  std::vector<BoundReport> out;
  out.push_back(BoundReport::make("dominating_sandwich", gdr, Relation::within, 2 * gamma, 3 * gamma, label(g)));
  out.back().note = "2*gamma <= gamma_dR <= 3*gamma";
  if (g.order() >= 2 && g.is_connected()) {
    const long long gr = solve_roman(g, opts).value;
    out.push_back(BoundReport::make("roman_strict_sandwich", gdr, Relation::strictly_within, gr, 2 * gr, label(g)));
    out.back().note = "gamma_R < gamma_dR < 2*gamma_R";
  } else {
    out.push_back(BoundReport::skip("roman_strict_sandwich", label(g),
                                    g.order() < 2 ? "trivial graph" : "graph is not connected"));
  }
  return out;
}

std::vector<BoundReport> check_min_drdf_partition(const Graph& g, PartitionMode mode, const SolverCaps& caps) {
  const auto opts = options_for(caps);
  const long long gamma = solve_domination(g, opts).value;
  std::vector<DRLabeling> minima;
  long long gdr = 0;
  if (mode == PartitionMode::witness_only) {
    const auto r = solve_double_roman(g, opts);
    gdr = r.value;
    minima.push_back(std::get<DRLabeling>(r.witness));
  } else {
    minima = enumerate_min_drdfs(g, SearchSpace::reduced, caps);
    gdr = minima.empty() ? 0 : weight(minima.front());
  }
  std::vector<BoundReport> out;
  for (const auto& f : minima) {
    const auto parts = partition(f);
    const auto context = label(g) + " f=" + f.to_string();
    out.push_back(BoundReport::make("min_drdf_v3_upper", static_cast<long long>(parts[3].size()), Relation::le,
                                    gdr - 2 * gamma, std::nullopt, context));
    out.back().note = "|V3| <= gamma_dR - 2*gamma";
    out.push_back(BoundReport::make("min_drdf_v2_lower", static_cast<long long>(parts[2].size()), Relation::ge,
                                    3 * gamma - gdr, std::nullopt, context));
    out.back().note = "|V2| >= 3*gamma - gamma_dR";
  }
  return out;
}

std::vector<BoundReport> check_cartesian(const Graph& g, const Graph& h, const SolverCaps& caps) {
  const auto opts = options_for(caps);
  const Graph product = cartesian_product(g, h);
  if (product.order() > std::min(caps.branch_and_bound, kMaxSolverOrder))
    throw ResourceLimit("check_cartesian: product order " + std::to_string(product.order()) + " exceeds cap " +
                        std::to_string(std::min(caps.branch_and_bound, kMaxSolverOrder)));
  const long long gp = solve_double_roman(product, opts).value;
  const long long gamma_g = solve_domination(g, opts).value;
  const long long gamma_h = solve_domination(h, opts).value;
  const long long gdr_g = solve_double_roman(g, opts).value;
  const long long gdr_h = solve_double_roman(h, opts).value;
  const long long n1 = static_cast<long long>(g.order());
  const long long n2 = static_cast<long long>(h.order());
  const auto context = label(g) + " x " + label(h);

  std::vector<BoundReport> out;
  out.push_back(BoundReport::make("cartesian_lower_gamma_g", gp, Relation::ge, ceil_div(gamma_g * gdr_h, 2),
                                  std::nullopt, context));
  out.back().note = "gamma(G)*gamma_dR(H)/2, rounded up";
  out.push_back(BoundReport::make("cartesian_lower_gamma_h", gp, Relation::ge, ceil_div(gamma_h * gdr_g, 2),
                                  std::nullopt, context));
  out.back().note = "gamma(H)*gamma_dR(G)/2, rounded up";
  out.push_back(BoundReport::make("cartesian_lower_product", gp, Relation::ge, ceil_div(gdr_g * gdr_h, 6),
                                  std::nullopt, context));
  out.back().note = "gamma_dR(G)*gamma_dR(H)/6, rounded up";
  out.push_back(BoundReport::make("cartesian_upper", gp, Relation::le, std::min(n2 * gdr_g, n1 * gdr_h),
                                  std::nullopt, context));
  out.back().note = "min{n2*gamma_dR(G), n1*gamma_dR(H)}";
  out.push_back(BoundReport::make("cartesian_domination_product", gp, Relation::gt, gamma_g * gamma_h, std::nullopt,
                                  context));
  out.back().note = "gamma(G)*gamma(H); derived from prior results on gamma_R";
  return out;
}

BoundReport check_twin(const Graph& g, Vertex u, TwinKind kind, const SolverCaps& caps) {
  if (u >= g.order()) throw InvalidArgument("twin vertex " + std::to_string(u) + " out of range");
  if (g.order() + 1 > std::min(caps.branch_and_bound, kMaxSolverOrder))
    throw ResourceLimit("check_twin: n+1 exceeds solver cap");
  const auto opts = options_for(caps);
  const bool true_twin = kind == TwinKind::true_twin;
  const Graph h = true_twin ? add_true_twin(g, u) : add_false_twin(g, u);
  const long long base = solve_double_roman(g, opts).value;
  const long long grown = solve_double_roman(h, opts).value;
  auto r = BoundReport::make(true_twin ? "true_twin_sandwich" : "false_twin_sandwich", grown, Relation::within, base,
                             base + (true_twin ? 1 : 2), label(g) + " u=" + std::to_string(u));
  r.note = true_twin ? "gamma_dR(G) <= gamma_dR(H) <= gamma_dR(G)+1" : "gamma_dR(G) <= gamma_dR(H) <= gamma_dR(G)+2";
  return r;
}

Realization build_corona_realization(int n, int m) {
  if (n < 1) throw InvalidSpec("corona realization requires n >= 1");
  if (m < 0 || m > n - 1) throw InvalidSpec("corona realization requires 0 <= m <= n-1");
  Graph base = star_graph(m);
  if (n - m - 1 > 0) base = disjoint_union(base, trivial_graph(n - m - 1));
  Realization out{corona(base, Graph(1, "K1")), 3LL * n - m, DRLabeling{}};
  out.graph = std::move(out.graph).renamed("(K1," + std::to_string(m) + "+" + std::to_string(n - m - 1) + "K1)oK1");

  DRLabeling f = DRLabeling::constant(out.graph.order(), 0);
  // 3 on the star center and on each isolated base vertex, 2 on the pendants
  // of the star leaves.
  f.set(0, 3);
  for (int i = m + 1; i < n; ++i) f.set(static_cast<std::size_t>(i), 3);
  for (int i = 1; i <= m; ++i) f.set(static_cast<std::size_t>(n + i), 2);
  out.witness = std::move(f);
  return out;
}

RomanPairRealization build_roman_pair_graph(int b, int i) {
  const int h = b / 2;
  if (h < 2) throw InvalidSpec("roman pair construction requires floor(b/2) >= 2");
  if (i < 1 || i > h - 1) throw InvalidSpec("roman pair construction requires 1 <= i <= floor(b/2)-1");

  std::vector<Edge> edges;
  Vertex next = static_cast<Vertex>(h);
  for (int j = 0; j < i; ++j)
    for (int k = j + 1; k < h; ++k)
      for (int copy = 0; copy < 2; ++copy) {
        edges.emplace_back(j, next);
        edges.emplace_back(k, next);
        ++next;
      }
  if (b % 2 == 1)
    for (int copy = 0; copy < 2; ++copy) edges.emplace_back(0, next++);

  RomanPairRealization out{Graph(next, edges, "G" + std::to_string(i) + "(b=" + std::to_string(b) + ")"),
                           static_cast<long long>(h) + i, b, RomanLabeling{}, DRLabeling{}};

  auto roman = RomanLabeling::constant(next, 0);
  for (int j = 0; j < h; ++j) roman.set(j, j < i ? 2 : 1);
  out.roman_witness = std::move(roman);

  auto dr = DRLabeling::constant(next, 0);
  for (int j = 0; j < h; ++j) dr.set(j, 2);
  if (b % 2 == 1) dr.set(0, 3);
  out.double_roman_witness = std::move(dr);
  return out;
}

namespace {

struct ChunkResult {
  std::optional<std::uint64_t> hit;  // edge mask
  std::uint64_t counted = 0;         // filtered graphs up to and including the hit
};

}  // namespace

PairScanResult scan_pair_realizability(long long a, long long b, int n_max, bool connected_only, unsigned threads) {
  if (n_max < 1 || n_max > kMaxEnumerationOrder)
    throw ResourceLimit("pair scan supports 1 <= n_max <= " + std::to_string(kMaxEnumerationOrder));
  PairScanResult result;
  result.a = a;
  result.b = b;
  result.n_max = n_max;
  result.connected_only = connected_only;
  threads = std::max(1u, threads);
  SolveOptions opts;
  opts.caps = SolverCaps::defaults();

  for (int n = 1; n <= n_max; ++n) {
    const std::uint64_t total = std::uint64_t{1} << pair_count(static_cast<std::size_t>(n));
    const std::uint64_t chunk = std::max<std::uint64_t>(1, std::min<std::uint64_t>(4096, total / (8 * threads) + 1));
    const std::size_t chunks = static_cast<std::size_t>((total + chunk - 1) / chunk);
    std::vector<ChunkResult> results(chunks);
    std::atomic<std::size_t> next{0};
    // Index of the earliest chunk known to contain a hit; later chunks can
    // be skipped without changing the answer.
    std::atomic<std::size_t> first_hit{chunks};

    auto worker = [&] {
      while (true) {
        const std::size_t c = next.fetch_add(1);
        if (c >= chunks) return;
        if (c > first_hit.load()) continue;
        ChunkResult& r = results[c];
        const std::uint64_t lo = c * chunk;
        const std::uint64_t hi = std::min(total, lo + chunk);
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
          const Graph g = graph_from_edge_mask(static_cast<std::size_t>(n), mask);
          if (connected_only && !g.is_connected()) continue;
          ++r.counted;
          if (solve_roman(g, opts).value != a) continue;
          if (solve_double_roman(g, opts).value != b) continue;
          r.hit = mask;
          std::size_t seen = first_hit.load();
          while (c < seen && !first_hit.compare_exchange_weak(seen, c)) {
          }
          break;
        }
      }
    };
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    const std::size_t hit_chunk = first_hit.load();
    const std::size_t upto = std::min(hit_chunk + 1, chunks);
    for (std::size_t c = 0; c < upto; ++c) result.graphs_scanned += results[c].counted;
    if (hit_chunk < chunks) {
      result.found = graph_from_edge_mask(static_cast<std::size_t>(n), *results[hit_chunk].hit);
      return result;
    }
  }
  return result;
}

}  // namespace drd
