#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "drd/graph.hpp"

namespace drd {

inline constexpr int kMaxEnumerationOrder = 7;

/// Number of vertex pairs on n vertices, i.e. the width of the edge bitmask.
constexpr std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

/// Bit i of `mask` selects the i-th pair (u, v), u < v, in lexicographic
/// order: (0,1), (0,2), ..., (0,n-1), (1,2), ...
Graph graph_from_edge_mask(std::size_t n, std::uint64_t mask);

// Every labeled simple graph on n vertices, exactly once, in increasing
// edge-bitmask order. Single consumer; use graph_from_edge_mask over a
// sub-range of masks to partition the scan.
class LabeledGraphStream {
 public:
  explicit LabeledGraphStream(int n);

  std::optional<Graph> next();
  std::uint64_t total() const noexcept { return total_; }

 private:
  std::size_t n_;
  std::uint64_t next_mask_ = 0;
  std::uint64_t total_;
};

LabeledGraphStream enumerate_labeled_graphs(int n);

}  // namespace drd
