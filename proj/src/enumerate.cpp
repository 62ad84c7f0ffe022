#include "drd/enumerate.hpp"

#include <string>
#include <vector>

#include "drd/errors.hpp"

namespace drd {

Graph graph_from_edge_mask(std::size_t n, std::uint64_t mask) {
  if (n == 0) throw InvalidArgument("graph must have at least one vertex");
  if (pair_count(n) < 64 && (mask >> pair_count(n)) != 0) throw InvalidArgument("edge mask wider than pair count");
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1) edges.emplace_back(u, v);
  return Graph(n, edges);
}

LabeledGraphStream::LabeledGraphStream(int n) : n_(static_cast<std::size_t>(n)) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw ResourceLimit("labeled graph enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerationOrder));
  total_ = std::uint64_t{1} << pair_count(n_);
}

std::optional<Graph> LabeledGraphStream::next() {
  if (next_mask_ == total_) return std::nullopt;
  return graph_from_edge_mask(n_, next_mask_++);
}

LabeledGraphStream enumerate_labeled_graphs(int n) { return LabeledGraphStream(n); }

}  // namespace drd
