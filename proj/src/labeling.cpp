#include "drd/labeling.hpp"

#include <algorithm>
#include <string>

namespace drd {

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

std::string VertexSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(members_[i]);
  }
  return out + "}";
}

std::string_view condition_tag(Condition c) { return c == Condition::zero_undefended ? "(i)" : "(ii)"; }

namespace {

template <int MaxValue>
void require_length(const Graph& g, const Labeling<MaxValue>& f) {
  if (f.size() != g.order())
    throw InvalidArgument("labeling has " + std::to_string(f.size()) + " entries for a graph on " +
                          std::to_string(g.order()) + " vertices");
}

}  // namespace

Verdict is_valid_drdf(const Graph& g, const DRLabeling& f) {
  require_length(g, f);
  Verdict verdict;
  for (Vertex v = 0; v < g.order(); ++v) {
    const int value = f[v];
    if (value >= 2) continue;
    int twos = 0;
    bool three = false;
    for (Vertex w : g.neighbors(v)) {
      twos += f[w] == 2;
      three |= f[w] == 3;
    }
    if (value == 0 && twos < 2 && !three) verdict.violations.push_back({v, Condition::zero_undefended});
    if (value == 1 && twos == 0 && !three) verdict.violations.push_back({v, Condition::one_undefended});
  }
  return verdict;
}

Verdict is_valid_rdf(const Graph& g, const RomanLabeling& f) {
  require_length(g, f);
  Verdict verdict;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (f[v] != 0) continue;
    const auto nbrs = g.neighbors(v);
    if (std::none_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return f[w] == 2; }))
      verdict.violations.push_back({v, Condition::zero_undefended});
  }
  return verdict;
}

bool is_dominating(const Graph& g, const VertexSet& d) {
  std::vector<char> covered(g.order(), 0);
  for (Vertex v : d) {
    if (v >= g.order()) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    covered[v] = 1;
    for (Vertex w : g.neighbors(v)) covered[w] = 1;
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

DRLabeling eliminate_ones(const Graph& g, const DRLabeling& f) {
  if (!is_valid_drdf(g, f)) throw InvalidArgument("eliminate_ones requires a valid DRDF");
  DRLabeling out = f;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (out[v] != 1) continue;
    // Values only move 1 -> 0 and 2 -> 3, so the neighbor that made v valid
    // is still valued >= 2 here.
    const auto nbrs = g.neighbors(v);
    auto w = std::find_if(nbrs.begin(), nbrs.end(), [&](Vertex x) { return out[x] >= 2; });
    if (out[*w] == 2) out.set(*w, 3);
    out.set(v, 0);
  }
  return out;
}

std::array<VertexSet, 4> partition(const DRLabeling& f) {
  std::array<std::vector<Vertex>, 4> parts;
  for (Vertex v = 0; v < f.size(); ++v) parts[f[v]].push_back(v);
  return {VertexSet(std::move(parts[0])), VertexSet(std::move(parts[1])), VertexSet(std::move(parts[2])),
          VertexSet(std::move(parts[3]))};
}

DRLabeling restrict(const DRLabeling& f, const VertexSet& c) {
  std::vector<std::uint8_t> values;
  values.reserve(c.size());
  for (Vertex v : c) {
    if (v >= f.size()) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    values.push_back(static_cast<std::uint8_t>(f[v]));
  }
  return DRLabeling(std::move(values));
}

DRLabeling restrict(const DRLabeling& f, const VertexSet& c, std::span<const Vertex> reindex) {
  if (reindex.size() < f.size()) throw InvalidArgument("reindex map shorter than labeling");
  std::vector<std::uint8_t> values(c.size(), 0);
  std::vector<char> used(c.size(), 0);
  for (Vertex v : c) {
    if (v >= f.size()) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    const Vertex target = reindex[v];
    if (target >= c.size() || used[target]) throw InvalidArgument("reindex map is not a bijection onto 0..|C|-1");
    used[target] = 1;
    values[target] = static_cast<std::uint8_t>(f[v]);
  }
  return DRLabeling(std::move(values));
}

}  // namespace drd
