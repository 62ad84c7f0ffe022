#include "drd/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <string>
#include <vector>

#include "drd/errors.hpp"

namespace drd {

namespace {

constexpr std::size_t kMaxGraph6Order = 62;

struct Line {
  std::string_view text;
  std::size_t number;  // 1-based
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 1;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({line, number++});
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

bool blank(std::string_view s) { return s.find_first_not_of(" \t") == std::string_view::npos; }

std::vector<long long> read_integers(const Line& line) {
  std::vector<long long> values;
  std::string_view s = line.text;
  std::size_t pos = 0;
  while (true) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    if (pos == s.size()) break;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), value);
    if (ec != std::errc{}) throw ParseError("line " + std::to_string(line.number) + ": expected an integer", line.number);
    pos = static_cast<std::size_t>(ptr - s.data());
    if (pos < s.size() && s[pos] != ' ' && s[pos] != '\t')
      throw ParseError("line " + std::to_string(line.number) + ": unexpected character", line.number);
    values.push_back(value);
  }
  return values;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<Line> lines;
  for (const auto& line : split_lines(text))
    if (!blank(line.text)) lines.push_back(line);
  if (lines.empty()) throw ParseError("empty edge list", 1);

  const auto header = read_integers(lines.front());
  if (header.size() != 2) throw ParseError("line " + std::to_string(lines.front().number) + ": expected 'n m'", lines.front().number);
  const long long n = header[0];
  const long long m = header[1];
  if (n < 1) throw ParseError("line " + std::to_string(lines.front().number) + ": n must be >= 1", lines.front().number);
  if (m < 0 || m > n * (n - 1) / 2)
    throw ParseError("line " + std::to_string(lines.front().number) + ": impossible edge count", lines.front().number);
  if (static_cast<long long>(lines.size()) - 1 != m)
    throw ParseError("expected " + std::to_string(m) + " edge lines, found " + std::to_string(lines.size() - 1),
                     lines.back().number);

  std::vector<char> seen(static_cast<std::size_t>(n * n), 0);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto where = "line " + std::to_string(line.number) + ": ";
    const auto uv = read_integers(line);
    if (uv.size() != 2) throw ParseError(where + "expected 'u v'", line.number);
    const long long u = uv[0];
    const long long v = uv[1];
    if (u == v) throw ParseError(where + "self-loop", line.number);
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(where + "vertex out of range", line.number);
    if (u > v) throw ParseError(where + "edge must be written with u < v", line.number);
    auto& flag = seen[static_cast<std::size_t>(u * n + v)];
    if (flag) throw ParseError(where + "duplicate edge", line.number);
    flag = 1;
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph parse_graph6(std::string_view text) {
  std::size_t offset = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) offset = header.size();
  std::string_view body = text.substr(offset);
  while (!body.empty() && (body.back() == '\n' || body.back() == '\r')) body.remove_suffix(1);
  if (body.empty()) throw ParseError("empty graph6 string", offset);

  for (std::size_t i = 0; i < body.size(); ++i)
    if (body[i] < 63 || body[i] > 126) throw ParseError("graph6 byte out of range", offset + i);
  if (body[0] == 126) throw ParseError("graph6 orders above 62 are not supported", offset);

  const std::size_t n = static_cast<std::size_t>(body[0] - 63);
  if (n == 0) throw ParseError("graph6 order must be >= 1", offset);
  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t expected = 1 + (bits + 5) / 6;
  if (body.size() != expected)
    throw ParseError("graph6 length " + std::to_string(body.size()) + ", expected " + std::to_string(expected),
                     offset + std::min(body.size(), expected));

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u, ++k) {
      const int byte = body[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(u, v);
    }
  if (bits % 6 != 0) {
    const int last = body.back() - 63;
    const int pad_mask = (1 << (6 - bits % 6)) - 1;
    if (last & pad_mask) throw ParseError("graph6 padding bits must be zero", offset + body.size() - 1);
  }
  return Graph(n, edges);
}

std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxGraph6Order) throw InvalidArgument("graph6 output supports n <= 62");
  std::string out(1, static_cast<char>(n + 63));
  int byte = 0;
  std::size_t k = 0;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u, ++k) {
      if (g.adjacent(u, v)) byte |= 1 << (5 - k % 6);
      if (k % 6 == 5) {
        out.push_back(static_cast<char>(byte + 63));
        byte = 0;
      }
    }
  if (k % 6 != 0) out.push_back(static_cast<char>(byte + 63));
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::edge_list ? parse_edge_list(text) : parse_graph6(text);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::edge_list ? write_edge_list(g) : write_graph6(g);
}

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "edge_list" || name == "edgelist" || name == "edges") return GraphFormat::edge_list;
  if (name == "graph6" || name == "g6") return GraphFormat::graph6;
  throw InvalidArgument("unknown graph format '" + std::string(name) + "'");
}

}  // namespace drd
