#pragma once

#include <string>
#include <string_view>

#include "drd/graph.hpp"

namespace drd {

enum class GraphFormat { edge_list, graph6 };

/// Edge list: a header line "n m" followed by m lines "u v" with u < v.
/// graph6: the standard byte encoding for 1 <= n <= 62, with an optional
/// ">>graph6<<" header and trailing newline.
/// Throws ParseError carrying the offending line (edge list) or byte offset
/// (graph6).
Graph parse_graph(std::string_view text, GraphFormat format);

std::string serialize_graph(const Graph& g, GraphFormat format);

GraphFormat parse_graph_format(std::string_view name);

}  // namespace drd
