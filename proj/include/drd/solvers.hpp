#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

#include "drd/graph.hpp"
#include "drd/labeling.hpp"

namespace drd {

enum class Invariant { domination, roman, double_roman };
enum class Method { branch_and_bound, brute_force };
/// reduced: subsets / {0,1,2}^n / {0,2,3}^n.  full: additionally {0,1,2,3}^n for
/// double Roman (identical to reduced for the other two invariants).
enum class SearchSpace { reduced, full };

std::string_view to_string(Invariant inv);
std::string_view to_string(Method m);
Invariant parse_invariant(std::string_view name);

// Size caps on exact computations. Defaults follow the documented limits;
// DRD_MAX_N in the environment overrides all of them at once.
struct SolverCaps {
  std::size_t branch_and_bound = 30;
  std::size_t brute_force_reduced = 12;
  std::size_t brute_force_full = 8;
  std::size_t enumerate_minima = 10;

  static SolverCaps defaults();
  /// Defaults, with every cap replaced by DRD_MAX_N when it is set.
  static SolverCaps from_env();
  static SolverCaps uniform(std::size_t n);
};

/// Hard limit from the 64-bit neighborhood masks used by the search kernels.
inline constexpr std::size_t kMaxSolverOrder = 64;

using Witness = std::variant<VertexSet, RomanLabeling, DRLabeling>;

struct SolveResult {
  long long value = 0;
  Witness witness;
  std::uint64_t nodes_explored = 0;
  Method method = Method::branch_and_bound;
};

struct SolveOptions {
  /// Return the lexicographically least optimal witness instead of the first
  /// one found. Sets are compared by their sorted member lists, labelings by
  /// their value vectors.
  bool canonical = false;
  SolverCaps caps = SolverCaps::from_env();
};

SolveResult solve_domination(const Graph& g, const SolveOptions& opts = {});
SolveResult solve_roman(const Graph& g, const SolveOptions& opts = {});
/// Searches {0,2,3}^V only; the witness never contains a 1.
SolveResult solve_double_roman(const Graph& g, const SolveOptions& opts = {});
SolveResult solve(const Graph& g, Invariant inv, const SolveOptions& opts = {});

/// Exhaustive enumeration; the witness is the lexicographically least minimum.
SolveResult brute_force(const Graph& g, Invariant inv, SearchSpace space = SearchSpace::reduced,
                        const SolverCaps& caps = SolverCaps::from_env());

/// Every minimum-weight DRDF in lexicographic order. The reduced space covers
/// {0,2,3}^V; the full space also returns minima that contain 1s.
std::vector<DRLabeling> enumerate_min_drdfs(const Graph& g, SearchSpace space = SearchSpace::reduced,
                                            const SolverCaps& caps = SolverCaps::from_env());

/// Greedy dominating set: repeatedly takes the vertex covering the most
/// undominated vertices (lowest index on ties).
VertexSet greedy_dominating_set(const Graph& g);

/// Verifies a witness against its graph and returns its weight or size;
/// throws InvalidArgument when it is not a valid certificate.
long long witness_value(const Graph& g, const Witness& w);

}  // namespace drd
