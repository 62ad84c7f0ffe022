#include "drd/solvers.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>

#include "drd/errors.hpp"

namespace drd {

std::string_view to_string(Invariant inv) {
  switch (inv) {
    case Invariant::domination: return "gamma";
    case Invariant::roman: return "gr";
    case Invariant::double_roman: return "gdr";
  }
  return "?";
}

std::string_view to_string(Method m) { return m == Method::branch_and_bound ? "branch_and_bound" : "brute_force"; }

Invariant parse_invariant(std::string_view name) {
  if (name == "gamma" || name == "domination") return Invariant::domination;
  if (name == "gr" || name == "roman") return Invariant::roman;
  if (name == "gdr" || name == "double_roman") return Invariant::double_roman;
  throw InvalidArgument("unknown invariant '" + std::string(name) + "' (expected gamma, gr or gdr)");
}

SolverCaps SolverCaps::defaults() { return {}; }

SolverCaps SolverCaps::uniform(std::size_t n) { return {n, n, n, n}; }

SolverCaps SolverCaps::from_env() {
  const char* env = std::getenv("DRD_MAX_N");
  if (env == nullptr || *env == '\0') return defaults();
  std::size_t n = 0;
  const std::string_view text(env);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (ec != std::errc{} || ptr != text.data() + text.size() || n == 0)
    throw InvalidArgument("DRD_MAX_N must be a positive integer, got '" + std::string(text) + "'");
  return uniform(n);
}

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(std::size_t v) { return Mask{1} << v; }

void require_cap(const Graph& g, std::size_t cap, std::string_view what) {
  const std::size_t limit = std::min(cap, kMaxSolverOrder);
  if (g.order() > limit)
    throw ResourceLimit(std::string(what) + ": n=" + std::to_string(g.order()) + " exceeds cap " +
                        std::to_string(limit));
}

struct BitGraph {
  std::size_t n;
  Mask all;
  std::vector<Mask> open;
  std::vector<Mask> closed;
  std::vector<int> degree;

  explicit BitGraph(const Graph& g)
      : n(g.order()), all(n == 64 ? ~Mask{0} : bit(n) - 1), open(n, 0), closed(n, 0), degree(n, 0) {
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w : g.neighbors(v)) open[v] |= bit(w);
      closed[v] = open[v] | bit(v);
      degree[v] = static_cast<int>(g.degree(v));
    }
  }
};

std::vector<Vertex> descending_degree_order(const BitGraph& bg) {
  std::vector<Vertex> order(bg.n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return bg.degree[a] > bg.degree[b]; });
  return order;
}

std::vector<Vertex> index_order(const BitGraph& bg) {
  std::vector<Vertex> order(bg.n);
  std::iota(order.begin(), order.end(), Vertex{0});
  return order;
}

// suffix_max[k] = max degree over order[k..]; 0 past the end.
std::vector<int> suffix_max_degree(const BitGraph& bg, const std::vector<Vertex>& order) {
  std::vector<int> out(order.size() + 1, 0);
  for (std::size_t k = order.size(); k-- > 0;) out[k] = std::max(out[k + 1], bg.degree[order[k]]);
  return out;
}

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

Mask mask_of(const VertexSet& s) {
  Mask m = 0;
  for (Vertex v : s) m |= bit(v);
  return m;
}

VertexSet set_of(Mask m) {
  std::vector<Vertex> members;
  for (; m; m &= m - 1) members.push_back(static_cast<Vertex>(std::countr_zero(m)));
  return VertexSet(std::move(members));
}

// --- domination -------------------------------------------------------------

class DominationSearch {
 public:
  explicit DominationSearch(const BitGraph& bg) : bg_(bg), max_closed_(static_cast<long long>(maxdeg()) + 1) {}

  void branch(Mask chosen, Mask dominated, int size) {
    ++nodes;
    if (dominated == bg_.all) {
      if (size < best_size) {
        best_size = size;
        best = chosen;
      }
      return;
    }
    const long long undominated = std::popcount(bg_.all & ~dominated);
    if (size + std::max(1LL, ceil_div(undominated, max_closed_)) >= best_size) return;
    const auto v = static_cast<std::size_t>(std::countr_zero(bg_.all & ~dominated));
    for (Mask cand = bg_.closed[v]; cand; cand &= cand - 1) {
      const auto u = static_cast<std::size_t>(std::countr_zero(cand));
      branch(chosen | bit(u), dominated | bg_.closed[u], size + 1);
    }
  }

  // Include-first scan in index order; the first dominating set of size
  // `target` found is the least by sorted member list.
  bool canonical(std::size_t i, Mask chosen, Mask dominated, int size, int target) {
    ++nodes;
    if (dominated == bg_.all) {
      best = chosen;
      return true;
    }
    if (i == bg_.n || size >= target) return false;
    const Mask undominated = bg_.all & ~dominated;
    for (Mask m = undominated; m; m &= m - 1) {
      const auto j = static_cast<std::size_t>(std::countr_zero(m));
      if ((bg_.closed[j] >> i) == 0) return false;
    }
    if (size + ceil_div(std::popcount(undominated), max_closed_) > target) return false;
    if (canonical(i + 1, chosen | bit(i), dominated | bg_.closed[i], size + 1, target)) return true;
    return canonical(i + 1, chosen, dominated, size, target);
  }

  Mask best = 0;
  int best_size = std::numeric_limits<int>::max();
  std::uint64_t nodes = 0;

 private:
  std::size_t maxdeg() const { return bg_.degree.empty() ? 0 : *std::max_element(bg_.degree.begin(), bg_.degree.end()); }

  const BitGraph& bg_;
  long long max_closed_;
};

// --- Roman ------------------------------------------------------------------

class RomanSearch {
 public:
  RomanSearch(const BitGraph& bg, std::vector<Vertex> order, std::vector<int> values)
      : bg_(bg), order_(std::move(order)), values_(std::move(values)), suffix_deg_(suffix_max_degree(bg_, order_)),
        labels_(bg.n, 0) {}

  // Returns false when the partial assignment cannot be completed; otherwise
  // sets `lb` to a lower bound on the weight still to be placed.
  bool bound(std::size_t k, Mask unassigned, Mask m2, Mask nonzero, long long& lb) const {
    long long uncovered = 0;
    for (Mask m = bg_.all & ~nonzero; m; m &= m - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(m));
      if (bg_.open[v] & m2) continue;
      if (!(unassigned & bit(v)) && !(bg_.open[v] & unassigned)) return false;
      ++uncovered;
    }
    const long long span = suffix_deg_[k] + 1;
    lb = span >= 2 ? ceil_div(2 * uncovered, span) : uncovered;
    return true;
  }

  void branch(std::size_t k, Mask unassigned, Mask m2, Mask nonzero, long long w) {
    ++nodes;
    long long lb = 0;
    if (!bound(k, unassigned, m2, nonzero, lb)) return;
    if (lb == 0) {
      if (w < best_weight) {
        best_weight = w;
        best.assign(labels_.begin(), labels_.end());
        for (std::size_t j = k; j < order_.size(); ++j) best[order_[j]] = 0;
      }
      return;
    }
    if (k == order_.size() || w + lb >= best_weight) return;
    const Vertex v = order_[k];
    for (int value : values_) {
      labels_[v] = static_cast<std::uint8_t>(value);
      branch(k + 1, unassigned & ~bit(v), value == 2 ? m2 | bit(v) : m2, value ? nonzero | bit(v) : nonzero,
             w + value);
    }
    labels_[v] = 0;
  }

  bool canonical(std::size_t k, Mask unassigned, Mask m2, Mask nonzero, long long w, long long target) {
    ++nodes;
    long long lb = 0;
    if (!bound(k, unassigned, m2, nonzero, lb) || w + lb > target) return false;
    if (lb == 0) {
      best.assign(labels_.begin(), labels_.end());
      for (std::size_t j = k; j < order_.size(); ++j) best[order_[j]] = 0;
      best_weight = w;
      return true;
    }
    if (k == order_.size()) return false;
    const Vertex v = order_[k];
    for (int value : values_) {
      labels_[v] = static_cast<std::uint8_t>(value);
      if (canonical(k + 1, unassigned & ~bit(v), value == 2 ? m2 | bit(v) : m2, value ? nonzero | bit(v) : nonzero,
                    w + value, target)) {
        labels_[v] = 0;
        return true;
      }
    }
    labels_[v] = 0;
    return false;
  }

  std::vector<std::uint8_t> best;
  long long best_weight = std::numeric_limits<long long>::max();
  std::uint64_t nodes = 0;

 private:
  const BitGraph& bg_;
  std::vector<Vertex> order_;
  std::vector<int> values_;
  std::vector<int> suffix_deg_;
  std::vector<std::uint8_t> labels_;
};

// --- double Roman -----------------------------------------------------------

// Demand of a vertex not valued >= 2: 2 units, minus 2 for a 3-neighbor or 1
// per 2-neighbor. A completion must drive total demand to zero; placing a 3
// removes at most 2(deg+1) units, placing a 2 at most deg+2.
class DoubleRomanSearch {
 public:
  DoubleRomanSearch(const BitGraph& bg, std::vector<Vertex> order, std::vector<int> values)
      : bg_(bg), order_(std::move(order)), values_(std::move(values)), suffix_deg_(suffix_max_degree(bg_, order_)),
        labels_(bg.n, 0) {}

  bool bound(std::size_t k, Mask unassigned, Mask m2, Mask m3, long long& lb) const {
    long long demand = 0;
    for (Mask m = bg_.all & ~(m2 | m3); m; m &= m - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(m));
      if (bg_.open[v] & m3) continue;
      const int d = 2 - std::min(2, std::popcount(bg_.open[v] & m2));
      if (d == 0) continue;
      // Irreparable: a 0-vertex with its whole neighborhood decided.
      if (!(unassigned & bit(v)) && !(bg_.open[v] & unassigned)) return false;
      demand += d;
    }
    if (demand == 0) {
      lb = 0;
      return true;
    }
    if (k == order_.size()) return false;
    const long long delta = suffix_deg_[k];
    lb = std::min(ceil_div(3 * demand, 2 * (delta + 1)), ceil_div(2 * demand, delta + 2));
    return true;
  }

  void branch(std::size_t k, Mask unassigned, Mask m2, Mask m3, long long w) {
    ++nodes;
    long long lb = 0;
    if (!bound(k, unassigned, m2, m3, lb)) return;
    if (lb == 0) {
      if (w < best_weight) record(k, w);
      return;
    }
    if (w + lb >= best_weight) return;
    const Vertex v = order_[k];
    for (int value : values_) {
      labels_[v] = static_cast<std::uint8_t>(value);
      branch(k + 1, unassigned & ~bit(v), value == 2 ? m2 | bit(v) : m2, value == 3 ? m3 | bit(v) : m3, w + value);
    }
    labels_[v] = 0;
  }

  bool canonical(std::size_t k, Mask unassigned, Mask m2, Mask m3, long long w, long long target) {
    ++nodes;
    long long lb = 0;
    if (!bound(k, unassigned, m2, m3, lb) || w + lb > target) return false;
    if (lb == 0) {
      record(k, w);
      return true;
    }
    const Vertex v = order_[k];
    for (int value : values_) {
      labels_[v] = static_cast<std::uint8_t>(value);
      if (canonical(k + 1, unassigned & ~bit(v), value == 2 ? m2 | bit(v) : m2, value == 3 ? m3 | bit(v) : m3,
                    w + value, target)) {
        labels_[v] = 0;
        return true;
      }
    }
    labels_[v] = 0;
    return false;
  }

  std::vector<std::uint8_t> best;
  long long best_weight = std::numeric_limits<long long>::max();
  std::uint64_t nodes = 0;

 private:
  void record(std::size_t k, long long w) {
    best_weight = w;
    best.assign(labels_.begin(), labels_.end());
    for (std::size_t j = k; j < order_.size(); ++j) best[order_[j]] = 0;
  }

  const BitGraph& bg_;
  std::vector<Vertex> order_;
  std::vector<int> values_;
  std::vector<int> suffix_deg_;
  std::vector<std::uint8_t> labels_;
};

// --- brute force ------------------------------------------------------------

bool drdf_ok(const BitGraph& bg, const std::vector<std::uint8_t>& f) {
  Mask m1 = 0, m2 = 0, m3 = 0;
  for (std::size_t v = 0; v < bg.n; ++v) {
    if (f[v] == 1) m1 |= bit(v);
    if (f[v] == 2) m2 |= bit(v);
    if (f[v] == 3) m3 |= bit(v);
  }
  for (std::size_t v = 0; v < bg.n; ++v) {
    if (f[v] == 0 && !(bg.open[v] & m3) && std::popcount(bg.open[v] & m2) < 2) return false;
    if (f[v] == 1 && !(bg.open[v] & (m2 | m3))) return false;
  }
  (void)m1;
  return true;
}

bool rdf_ok(const BitGraph& bg, const std::vector<std::uint8_t>& f) {
  Mask m2 = 0;
  for (std::size_t v = 0; v < bg.n; ++v)
    if (f[v] == 2) m2 |= bit(v);
  for (std::size_t v = 0; v < bg.n; ++v)
    if (f[v] == 0 && !(bg.open[v] & m2)) return false;
  return true;
}

// Visits every vector in alphabet^n in lexicographic order (index 0 most
// significant). `visit` returns nothing; the caller keeps the first strict
// minimum, which is then the lexicographically least one.
template <class Visit>
void for_each_labeling(std::size_t n, const std::vector<std::uint8_t>& alphabet, Visit&& visit) {
  std::vector<std::size_t> digits(n, 0);
  std::vector<std::uint8_t> f(n, alphabet[0]);
  while (true) {
    visit(f);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++digits[i] < alphabet.size()) {
        f[i] = alphabet[digits[i]];
        break;
      }
      digits[i] = 0;
      f[i] = alphabet[0];
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

long long sum(const std::vector<std::uint8_t>& f) { return std::accumulate(f.begin(), f.end(), 0LL); }

}  // namespace

VertexSet greedy_dominating_set(const Graph& g) {
  require_cap(g, kMaxSolverOrder, "greedy_dominating_set");
  const BitGraph bg(g);
  Mask dominated = 0, chosen = 0;
  while (dominated != bg.all) {
    std::size_t pick = 0;
    int gain = -1;
    for (std::size_t v = 0; v < bg.n; ++v) {
      const int c = std::popcount(bg.closed[v] & ~dominated);
      if (c > gain) {
        gain = c;
        pick = v;
      }
    }
    chosen |= bit(pick);
    dominated |= bg.closed[pick];
  }
  return set_of(chosen);
}

SolveResult solve_domination(const Graph& g, const SolveOptions& opts) {
  require_cap(g, opts.caps.branch_and_bound, "solve_domination");
  const BitGraph bg(g);
  DominationSearch search(bg);
  const VertexSet greedy = greedy_dominating_set(g);
  search.best = mask_of(greedy);
  search.best_size = static_cast<int>(greedy.size());
  search.branch(0, 0, 0);
  if (opts.canonical) search.canonical(0, 0, 0, 0, search.best_size);
  return {search.best_size, set_of(search.best), search.nodes, Method::branch_and_bound};
}

SolveResult solve_roman(const Graph& g, const SolveOptions& opts) {
  require_cap(g, opts.caps.branch_and_bound, "solve_roman");
  const BitGraph bg(g);
  RomanSearch search(bg, descending_degree_order(bg), {2, 0, 1});
  const VertexSet greedy = greedy_dominating_set(g);
  if (2 * greedy.size() < g.order()) {
    search.best.assign(g.order(), 0);
    for (Vertex v : greedy) search.best[v] = 2;
    search.best_weight = 2 * static_cast<long long>(greedy.size());
  } else {
    search.best.assign(g.order(), 1);
    search.best_weight = static_cast<long long>(g.order());
  }
  search.branch(0, bg.all, 0, 0, 0);
  const long long value = search.best_weight;
  std::uint64_t nodes = search.nodes;
  std::vector<std::uint8_t> witness = search.best;
  if (opts.canonical) {
    RomanSearch lex(bg, index_order(bg), {0, 1, 2});
    lex.canonical(0, bg.all, 0, 0, 0, value);
    witness = lex.best;
    nodes += lex.nodes;
  }
  return {value, RomanLabeling(std::move(witness)), nodes, Method::branch_and_bound};
}

SolveResult solve_double_roman(const Graph& g, const SolveOptions& opts) {
  require_cap(g, opts.caps.branch_and_bound, "solve_double_roman");
  const BitGraph bg(g);
  DoubleRomanSearch search(bg, descending_degree_order(bg), {3, 2, 0});
  const VertexSet greedy = greedy_dominating_set(g);
  search.best.assign(g.order(), 0);
  for (Vertex v : greedy) search.best[v] = 3;
  search.best_weight = 3 * static_cast<long long>(greedy.size());
  search.branch(0, bg.all, 0, 0, 0);
  const long long value = search.best_weight;
  std::uint64_t nodes = search.nodes;
  std::vector<std::uint8_t> witness = search.best;
  if (opts.canonical) {
    DoubleRomanSearch lex(bg, index_order(bg), {0, 2, 3});
    lex.canonical(0, bg.all, 0, 0, 0, value);
    witness = lex.best;
    nodes += lex.nodes;
  }
  return {value, DRLabeling(std::move(witness)), nodes, Method::branch_and_bound};
}

SolveResult solve(const Graph& g, Invariant inv, const SolveOptions& opts) {
  switch (inv) {
    case Invariant::domination: return solve_domination(g, opts);
    case Invariant::roman: return solve_roman(g, opts);
    case Invariant::double_roman: return solve_double_roman(g, opts);
  }
  throw InvalidArgument("unknown invariant");
}

SolveResult brute_force(const Graph& g, Invariant inv, SearchSpace space, const SolverCaps& caps) {
  const bool full_dr = inv == Invariant::double_roman && space == SearchSpace::full;
  require_cap(g, full_dr ? caps.brute_force_full : caps.brute_force_reduced, "brute_force");
  const BitGraph bg(g);
  SolveResult result;
  result.method = Method::brute_force;

  if (inv == Invariant::domination) {
    Mask best = 0;
    int best_size = std::numeric_limits<int>::max();
    for (Mask s = 0; s <= bg.all; ++s) {
      ++result.nodes_explored;
      Mask covered = 0;
      for (Mask m = s; m; m &= m - 1) covered |= bg.closed[static_cast<std::size_t>(std::countr_zero(m))];
      if (covered == bg.all) {
        const int size = std::popcount(s);
        // Equal sizes: the set owning the lowest differing vertex sorts first.
        const Mask diff = s ^ best;
        if (size < best_size || (size == best_size && (s & diff & (~diff + 1)))) {
          best_size = size;
          best = s;
        }
      }
      if (s == bg.all) break;
    }
    result.value = best_size;
    result.witness = set_of(best);
    return result;
  }

  const std::vector<std::uint8_t> alphabet = inv == Invariant::roman ? std::vector<std::uint8_t>{0, 1, 2}
                                             : full_dr                ? std::vector<std::uint8_t>{0, 1, 2, 3}
                                                                      : std::vector<std::uint8_t>{0, 2, 3};
  long long best_weight = std::numeric_limits<long long>::max();
  std::vector<std::uint8_t> best;
  for_each_labeling(bg.n, alphabet, [&](const std::vector<std::uint8_t>& f) {
    ++result.nodes_explored;
    const long long w = sum(f);
    if (w >= best_weight) return;
    if (inv == Invariant::roman ? rdf_ok(bg, f) : drdf_ok(bg, f)) {
      best_weight = w;
      best = f;
    }
  });
  result.value = best_weight;
  if (inv == Invariant::roman)
    result.witness = RomanLabeling(std::move(best));
  else
    result.witness = DRLabeling(std::move(best));
  return result;
}

std::vector<DRLabeling> enumerate_min_drdfs(const Graph& g, SearchSpace space, const SolverCaps& caps) {
  require_cap(g, caps.enumerate_minima, "enumerate_min_drdfs");
  const BitGraph bg(g);
  SolveOptions opts;
  opts.caps = caps;
  opts.caps.branch_and_bound = std::max(opts.caps.branch_and_bound, caps.enumerate_minima);
  long long target = solve_double_roman(g, opts).value;

  const std::vector<std::uint8_t> alphabet =
      space == SearchSpace::full ? std::vector<std::uint8_t>{0, 1, 2, 3} : std::vector<std::uint8_t>{0, 2, 3};
  std::vector<DRLabeling> out;
  std::vector<std::uint8_t> f(bg.n, 0);
  // Depth-first in lexicographic order with a weight ceiling. A lighter valid
  // labeling would contradict `target`; if one shows up it replaces the
  // collected set rather than being ignored.
  auto rec = [&](auto&& self, std::size_t i, long long w) -> void {
    if (w > target) return;
    if (i == bg.n) {
      if (!drdf_ok(bg, f)) return;
      if (w < target) {
        out.clear();
        target = w;
      }
      if (w == target) out.emplace_back(f);
      return;
    }
    for (auto value : alphabet) {
      f[i] = value;
      self(self, i + 1, w + value);
    }
    f[i] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

long long witness_value(const Graph& g, const Witness& w) {
  return std::visit(
      [&](const auto& x) -> long long {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, VertexSet>) {
          if (!is_dominating(g, x)) throw InvalidArgument("witness is not a dominating set");
          return static_cast<long long>(x.size());
        } else if constexpr (std::is_same_v<T, RomanLabeling>) {
          if (!is_valid_rdf(g, x)) throw InvalidArgument("witness is not a Roman dominating function");
          return weight(x);
        } else {
          if (!is_valid_drdf(g, x)) throw InvalidArgument("witness is not a double Roman dominating function");
          return weight(x);
        }
      },
      w);
}

}  // namespace drd
