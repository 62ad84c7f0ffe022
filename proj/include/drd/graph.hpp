#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace drd {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..n-1. Immutable once built; every
// constructor validates symmetry, loop-freedom and index range.
class Graph {
 public:
  /// Edgeless graph on n >= 1 vertices.
  explicit Graph(std::size_t n, std::string name = {});

  /// Throws InvalidArgument on a loop, a duplicate edge or an out-of-range
  /// endpoint.
  Graph(std::size_t n, std::span<const Edge> edges, std::string name = {});
  Graph(std::size_t n, std::initializer_list<Edge> edges, std::string name = {})
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size()), std::move(name)) {}

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept { return edge_count_; }
  const std::string& name() const noexcept { return name_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  std::size_t max_degree() const noexcept;
  bool is_connected() const;

  Graph renamed(std::string name) const&;
  Graph renamed(std::string name) &&;

  /// Re-checks the representation invariants; returns false if any fails.
  bool valid() const noexcept;

  /// Structural equality; names are ignored.
  friend bool operator==(const Graph& a, const Graph& b) noexcept { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
  std::string name_;
};

struct RootedGraph {
  Graph graph;
  Vertex root = 0;

  RootedGraph(Graph g, Vertex r);
};

enum class FamilyKind {
  path,
  cycle,
  complete,
  complete_bipartite,
  star,
  grid2,
  trivial,
  disjoint_union,
};

// Parametric family descriptor. `parts` is used only by disjoint_union.
struct FamilySpec {
  FamilyKind kind = FamilyKind::path;
  std::vector<int> params;
  std::vector<FamilySpec> parts;

  static FamilySpec path(int n) { return {FamilyKind::path, {n}, {}}; }
  static FamilySpec cycle(int n) { return {FamilyKind::cycle, {n}, {}}; }
  static FamilySpec complete(int n) { return {FamilyKind::complete, {n}, {}}; }
  static FamilySpec complete_bipartite(int p, int q) { return {FamilyKind::complete_bipartite, {p, q}, {}}; }
  static FamilySpec star(int m) { return {FamilyKind::star, {m}, {}}; }
  static FamilySpec grid2(int n) { return {FamilyKind::grid2, {n}, {}}; }
  static FamilySpec trivial(int n) { return {FamilyKind::trivial, {n}, {}}; }
  static FamilySpec disjoint_union(std::vector<FamilySpec> parts) {
    return {FamilyKind::disjoint_union, {}, std::move(parts)};
  }

  /// Compact "kind:params" form, e.g. "cycle:7", "kpq:2,3", "star:2+trivial:1".
  static FamilySpec parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

std::string_view to_string(FamilyKind kind);

Graph generate(const FamilySpec& spec);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int p, int q);
/// K_{1,m} with the center at index 0; star(0) is K1.
Graph star_graph(int m);
/// P2 box Pn; vertex (i, j) (1-based) sits at index (i-1)*n + (j-1).
Graph grid2_graph(int n);
Graph trivial_graph(int n);

/// Vertex (u, v) sits at index u*|V(h)| + v.
Graph cartesian_product(const Graph& g, const Graph& h);

/// Base vertices keep indices 0..n1-1; copy i of h occupies
/// [n1 + i*n2, n1 + (i+1)*n2).
Graph corona(const Graph& g, const Graph& h);

/// Vertex i of g is identified with the root of hs[i]; non-root vertices of
/// hs[0], hs[1], ... get fresh indices from |V(g)| upward, in order.
Graph rooted_product(const Graph& g, std::span<const RootedGraph> hs);

/// The new vertex has index n and neighborhood N[u].
Graph add_true_twin(const Graph& g, Vertex u);
/// The new vertex has index n and neighborhood N(u).
Graph add_false_twin(const Graph& g, Vertex u);

Graph disjoint_union(const Graph& g, const Graph& h);

}  // namespace drd
