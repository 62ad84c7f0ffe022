#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "drd/errors.hpp"
#include "drd/graph.hpp"

namespace drd {

// Per-vertex value assignment with every entry in [0, MaxValue].
template <int MaxValue>
class Labeling {
 public:
  static constexpr int max_value = MaxValue;

  Labeling() = default;
  explicit Labeling(std::vector<std::uint8_t> values) : values_(std::move(values)) { check(); }
  Labeling(std::initializer_list<int> values) {
    values_.reserve(values.size());
    for (int v : values) {
      if (v < 0 || v > MaxValue) throw InvalidArgument("labeling value out of range: " + std::to_string(v));
      values_.push_back(static_cast<std::uint8_t>(v));
    }
  }
  static Labeling constant(std::size_t n, int value) {
    return Labeling(std::vector<std::uint8_t>(n, static_cast<std::uint8_t>(value)));
  }

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  int operator[](std::size_t v) const { return values_.at(v); }
  void set(std::size_t v, int value) {
    if (value < 0 || value > MaxValue) throw InvalidArgument("labeling value out of range: " + std::to_string(value));
    values_.at(v) = static_cast<std::uint8_t>(value);
  }
  std::span<const std::uint8_t> values() const noexcept { return values_; }

  /// Comma-separated values in index order, e.g. "0,3,0".
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i) out.push_back(',');
      out.push_back(static_cast<char>('0' + values_[i]));
    }
    return out;
  }
  static Labeling parse(std::string_view text);

  friend bool operator==(const Labeling&, const Labeling&) = default;
  friend auto operator<=>(const Labeling&, const Labeling&) = default;

 private:
  void check() const {
    for (auto v : values_)
      if (v > MaxValue) throw InvalidArgument("labeling value out of range: " + std::to_string(v));
  }

  std::vector<std::uint8_t> values_;
};

/// f : V -> {0,1,2,3}.
using DRLabeling = Labeling<3>;
/// f : V -> {0,1,2}.
using RomanLabeling = Labeling<2>;

// Sorted, duplicate-free set of vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> members);
  VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const;
  std::span<const Vertex> members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  std::string to_string() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

enum class Condition {
  /// A 0-vertex lacks two 2-neighbors and a 3-neighbor (for Roman labelings:
  /// a 0-vertex without a 2-neighbor).
  zero_undefended,
  /// A 1-vertex has no neighbor valued 2 or more.
  one_undefended,
};

struct Violation {
  Vertex vertex;
  Condition condition;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct Verdict {
  std::vector<Violation> violations;

  bool valid() const noexcept { return violations.empty(); }
  explicit operator bool() const noexcept { return valid(); }
};

std::string_view condition_tag(Condition c);

Verdict is_valid_drdf(const Graph& g, const DRLabeling& f);
Verdict is_valid_rdf(const Graph& g, const RomanLabeling& f);

/// True iff N[d] = V. Throws InvalidArgument on an out-of-range member.
bool is_dominating(const Graph& g, const VertexSet& d);

template <int MaxValue>
long long weight(const Labeling<MaxValue>& f) {
  long long w = 0;
  for (auto v : f.values()) w += v;
  return w;
}

/// Rewrites a valid DRDF into one without 1s and no larger weight. Vertices
/// valued 1 are visited in increasing index; the lowest-indexed neighbor
/// currently valued >= 2 absorbs it (a 2 is promoted to 3).
DRLabeling eliminate_ones(const Graph& g, const DRLabeling& f);

/// (V0, V1, V2, V3).
std::array<VertexSet, 4> partition(const DRLabeling& f);

/// f restricted to `c`: entry i of the result is f(c[i]), i.e. the reindex map
/// sends the i-th smallest member of c to i.
DRLabeling restrict(const DRLabeling& f, const VertexSet& c);

/// Restriction through an explicit old -> new map; `reindex[v]` for each v in c
/// must be a distinct index in [0, |c|).
DRLabeling restrict(const DRLabeling& f, const VertexSet& c, std::span<const Vertex> reindex);

template <int MaxValue>
Labeling<MaxValue> Labeling<MaxValue>::parse(std::string_view text) {
  std::vector<std::uint8_t> values;
  std::size_t pos = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (pos < text.size() && is_space(text[pos])) ++pos;
  if (pos == text.size()) return Labeling{};
  while (true) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos == text.size() || text[pos] < '0' || text[pos] > '9')
      throw ParseError("expected a digit in labeling", pos);
    int value = text[pos] - '0';
    ++pos;
    if (value > MaxValue) throw ParseError("labeling value out of range: " + std::to_string(value), pos - 1);
    values.push_back(static_cast<std::uint8_t>(value));
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ',' in labeling", pos);
    ++pos;
  }
  return Labeling(std::move(values));
}

}  // namespace drd
