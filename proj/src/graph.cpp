#include "drd/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <string>

#include "drd/errors.hpp"

namespace drd {

namespace {

std::string edge_text(Vertex u, Vertex v) { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }

void require_nonempty(const Graph& g, const char* op) {
  if (g.order() == 0) throw InvalidArgument(std::string(op) + ": empty graph");
}

}  // namespace

Graph::Graph(std::size_t n, std::string name) : adj_(n), name_(std::move(name)) {
  if (n == 0) throw InvalidArgument("graph must have at least one vertex");
}

Graph::Graph(std::size_t n, std::span<const Edge> edges, std::string name) : Graph(n, std::move(name)) {
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw InvalidArgument("edge " + edge_text(u, v) + " out of range for n=" + std::to_string(n));
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) throw InvalidArgument("duplicate edge");
  }
  edge_count_ = edges.size();
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nbrs = adj_.at(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adj_.size(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t d = 0;
  for (const auto& nbrs : adj_) d = std::max(d, nbrs.size());
  return d;
}

bool Graph::is_connected() const {
  std::vector<char> seen(order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj_[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == order();
}

Graph Graph::renamed(std::string name) const& {
  Graph g = *this;
  g.name_ = std::move(name);
  return g;
}

Graph Graph::renamed(std::string name) && {
  name_ = std::move(name);
  return std::move(*this);
}

bool Graph::valid() const noexcept {
  if (adj_.empty()) return false;
  std::size_t degree_sum = 0;
  for (Vertex u = 0; u < adj_.size(); ++u) {
    const auto& nbrs = adj_[u];
    degree_sum += nbrs.size();
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      Vertex v = nbrs[i];
      if (v >= adj_.size() || v == u) return false;
      if (i > 0 && nbrs[i - 1] >= v) return false;
      const auto& back = adj_[v];
      if (!std::binary_search(back.begin(), back.end(), u)) return false;
    }
  }
  return degree_sum == 2 * edge_count_;
}

RootedGraph::RootedGraph(Graph g, Vertex r) : graph(std::move(g)), root(r) {
  if (root >= graph.order()) throw InvalidArgument("root " + std::to_string(root) + " out of range");
}

// --- family specs -----------------------------------------------------------

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::path: return "path";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::complete: return "complete";
    case FamilyKind::complete_bipartite: return "kpq";
    case FamilyKind::star: return "star";
    case FamilyKind::grid2: return "grid2";
    case FamilyKind::trivial: return "trivial";
    case FamilyKind::disjoint_union: return "union";
  }
  return "?";
}

namespace {

FamilyKind parse_kind(std::string_view name) {
  if (name == "path" || name == "P") return FamilyKind::path;
  if (name == "cycle" || name == "C") return FamilyKind::cycle;
  if (name == "complete" || name == "K") return FamilyKind::complete;
  if (name == "kpq" || name == "complete_bipartite") return FamilyKind::complete_bipartite;
  if (name == "star") return FamilyKind::star;
  if (name == "grid2") return FamilyKind::grid2;
  if (name == "trivial" || name == "empty") return FamilyKind::trivial;
  throw InvalidSpec("unknown family kind '" + std::string(name) + "'");
}

std::size_t arity(FamilyKind kind) { return kind == FamilyKind::complete_bipartite ? 2 : 1; }

FamilySpec parse_single(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw InvalidSpec("family spec '" + std::string(text) + "' lacks ':params'");
  FamilySpec spec;
  spec.kind = parse_kind(text.substr(0, colon));
  std::string_view rest = text.substr(colon + 1);
  while (true) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc{} || ptr != item.data() + item.size() || item.empty())
      throw InvalidSpec("bad integer parameter '" + std::string(item) + "' in '" + std::string(text) + "'");
    spec.params.push_back(value);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (spec.params.size() != arity(spec.kind))
    throw InvalidSpec("family '" + std::string(to_string(spec.kind)) + "' takes " + std::to_string(arity(spec.kind)) +
                      " parameter(s)");
  return spec;
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
  if (text.find('+') == std::string_view::npos) return parse_single(text);
  std::vector<FamilySpec> parts;
  while (true) {
    auto plus = text.find('+');
    parts.push_back(parse_single(text.substr(0, plus)));
    if (plus == std::string_view::npos) break;
    text = text.substr(plus + 1);
  }
  return disjoint_union(std::move(parts));
}

std::string FamilySpec::to_string() const {
  if (kind == FamilyKind::disjoint_union) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out += '+';
      out += parts[i].to_string();
    }
    return out;
  }
  std::string out(drd::to_string(kind));
  out += ':';
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(params[i]);
  }
  return out;
}

// --- generators -------------------------------------------------------------

Graph path_graph(int n) {
  if (n < 1) throw InvalidSpec("path requires n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges, "P" + std::to_string(n));
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidSpec("cycle requires n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  return Graph(n, edges, "C" + std::to_string(n));
}

Graph complete_graph(int n) {
  if (n < 1) throw InvalidSpec("complete graph requires n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges, "K" + std::to_string(n));
}

Graph complete_bipartite_graph(int p, int q) {
  if (p < 1 || q < 1) throw InvalidSpec("complete bipartite graph requires p, q >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < p; ++u)
    for (int v = 0; v < q; ++v) edges.emplace_back(u, p + v);
  return Graph(p + q, edges, "K" + std::to_string(p) + "," + std::to_string(q));
}

Graph star_graph(int m) {
  if (m < 0) throw InvalidSpec("star requires m >= 0");
  std::vector<Edge> edges;
  for (int v = 1; v <= m; ++v) edges.emplace_back(0, v);
  return Graph(m + 1, edges, "K1," + std::to_string(m));
}

Graph grid2_graph(int n) {
  if (n < 1) throw InvalidSpec("grid2 requires n >= 1");
  return cartesian_product(path_graph(2), path_graph(n)).renamed("G2," + std::to_string(n));
}

Graph trivial_graph(int n) {
  if (n < 1) throw InvalidSpec("trivial graph requires n >= 1");
  return Graph(n, std::to_string(n) + "K1");
}

Graph generate(const FamilySpec& spec) {
  auto need = [&](std::size_t k) {
    if (spec.params.size() != k)
      throw InvalidSpec("family '" + std::string(to_string(spec.kind)) + "' takes " + std::to_string(k) +
                        " parameter(s)");
  };
  switch (spec.kind) {
    case FamilyKind::path: need(1); return path_graph(spec.params[0]);
    case FamilyKind::cycle: need(1); return cycle_graph(spec.params[0]);
    case FamilyKind::complete: need(1); return complete_graph(spec.params[0]);
    case FamilyKind::complete_bipartite: need(2); return complete_bipartite_graph(spec.params[0], spec.params[1]);
    case FamilyKind::star: need(1); return star_graph(spec.params[0]);
    case FamilyKind::grid2: need(1); return grid2_graph(spec.params[0]);
    case FamilyKind::trivial: need(1); return trivial_graph(spec.params[0]);
    case FamilyKind::disjoint_union: {
      if (spec.parts.empty()) throw InvalidSpec("disjoint union needs at least one part");
      Graph g = generate(spec.parts.front());
      for (std::size_t i = 1; i < spec.parts.size(); ++i) g = disjoint_union(g, generate(spec.parts[i]));
      return g;
    }
  }
  throw InvalidSpec("unknown family kind");
}

// --- operators --------------------------------------------------------------

Graph cartesian_product(const Graph& g, const Graph& h) {
  require_nonempty(g, "cartesian_product");
  require_nonempty(h, "cartesian_product");
  const auto n1 = static_cast<Vertex>(g.order());
  const auto n2 = static_cast<Vertex>(h.order());
  auto idx = [n2](Vertex u, Vertex v) { return u * n2 + v; };
  std::vector<Edge> edges;
  edges.reserve(n1 * h.size() + n2 * g.size());
  for (Vertex u = 0; u < n1; ++u)
    for (auto [a, b] : h.edges()) edges.emplace_back(idx(u, a), idx(u, b));
  for (auto [a, b] : g.edges())
    for (Vertex v = 0; v < n2; ++v) edges.emplace_back(idx(a, v), idx(b, v));
  return Graph(std::size_t{n1} * n2, edges, "(" + g.name() + ")x(" + h.name() + ")");
}

Graph corona(const Graph& g, const Graph& h) {
  require_nonempty(g, "corona");
  const auto n1 = static_cast<Vertex>(g.order());
  const auto n2 = static_cast<Vertex>(h.order());
  std::vector<Edge> edges = g.edges();
  const auto h_edges = h.edges();
  for (Vertex i = 0; i < n1; ++i) {
    const Vertex base = n1 + i * n2;
    for (auto [a, b] : h_edges) edges.emplace_back(base + a, base + b);
    for (Vertex v = 0; v < n2; ++v) edges.emplace_back(i, base + v);
  }
  return Graph(std::size_t{n1} * (1 + n2), edges, "(" + g.name() + ")o(" + h.name() + ")");
}

Graph rooted_product(const Graph& g, std::span<const RootedGraph> hs) {
  require_nonempty(g, "rooted_product");
  if (hs.size() != g.order())
    throw InvalidArgument("rooted_product: " + std::to_string(hs.size()) + " rooted graphs for " +
                          std::to_string(g.order()) + " vertices");
  std::vector<Edge> edges = g.edges();
  Vertex next = static_cast<Vertex>(g.order());
  for (Vertex i = 0; i < hs.size(); ++i) {
    const auto& [h, root] = hs[i];
    std::vector<Vertex> map(h.order());
    for (Vertex v = 0; v < h.order(); ++v) map[v] = (v == root) ? i : next++;
    for (auto [a, b] : h.edges()) {
      auto [x, y] = std::minmax(map[a], map[b]);
      edges.emplace_back(x, y);
    }
  }
  return Graph(next, edges, g.name() + "(H)");
}

namespace {

Graph add_twin(const Graph& g, Vertex u, bool closed) {
  if (u >= g.order()) throw InvalidArgument("twin vertex " + std::to_string(u) + " out of range");
  const auto n = static_cast<Vertex>(g.order());
  std::vector<Edge> edges = g.edges();
  for (Vertex w : g.neighbors(u)) edges.emplace_back(w, n);
  if (closed) edges.emplace_back(u, n);
  return Graph(n + 1, edges, g.name() + (closed ? "+tt" : "+ft") + std::to_string(u));
}

}  // namespace

Graph add_true_twin(const Graph& g, Vertex u) { return add_twin(g, u, true); }
Graph add_false_twin(const Graph& g, Vertex u) { return add_twin(g, u, false); }

Graph disjoint_union(const Graph& g, const Graph& h) {
  require_nonempty(g, "disjoint_union");
  require_nonempty(h, "disjoint_union");
  const auto shift = static_cast<Vertex>(g.order());
  std::vector<Edge> edges = g.edges();
  for (auto [a, b] : h.edges()) edges.emplace_back(a + shift, b + shift);
  return Graph(g.order() + h.order(), edges, g.name() + "+" + h.name());
}

}  // namespace drd
