#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "drd/graph.hpp"
#include "drd/labeling.hpp"
#include "drd/solvers.hpp"

namespace drd {

enum class Relation {
  le,               // lhs <= rhs
  lt,               // lhs <  rhs
  ge,               // lhs >= rhs
  gt,               // lhs >  rhs
  within,           // rhs <= lhs <= rhs_upper
  strictly_within,  // rhs <  lhs <  rhs_upper
};

std::string_view to_string(Relation r);
bool evaluate(Relation r, long long lhs, long long rhs, std::optional<long long> rhs_upper = std::nullopt);

// One evaluated inequality. Fractional right-hand sides are stored rounded
// toward the side that keeps the integer comparison exact (a lower bound
// x/2 becomes ceil(x/2)). A skipped report carries the reason and no
// comparison; it never counts as a violation.
struct BoundReport {
  std::string bound_id;
  long long lhs = 0;
  long long rhs = 0;
  std::optional<long long> rhs_upper;
  Relation relation = Relation::le;
  bool holds = true;
  std::string context;
  std::string note;
  std::optional<std::string> skipped;

  static BoundReport make(std::string id, long long lhs, Relation rel, long long rhs,
                          std::optional<long long> rhs_upper, std::string context);
  static BoundReport skip(std::string id, std::string context, std::string reason);
};

/// 2*gamma <= gamma_dR <= 3*gamma and, for connected graphs with an edge,
/// gamma_R < gamma_dR < 2*gamma_R.
std::vector<BoundReport> check_fundamental(const Graph& g, const SolverCaps& caps = SolverCaps::from_env());

enum class PartitionMode { witness_only, all_minima };

/// |V3| <= gamma_dR - 2*gamma and |V2| >= 3*gamma - gamma_dR, on the solver
/// witness or on every minimum DRDF over {0,2,3}.
std::vector<BoundReport> check_min_drdf_partition(const Graph& g, PartitionMode mode,
                                                  const SolverCaps& caps = SolverCaps::from_env());

/// Lower bounds gamma(X)*gamma_dR(Y)/2 in both factor orders, the
/// gamma_dR(G)*gamma_dR(H)/6 bound, the min{n2*gamma_dR(G), n1*gamma_dR(H)}
/// upper bound and gamma_dR(G box H) > gamma(G)*gamma(H).
std::vector<BoundReport> check_cartesian(const Graph& g, const Graph& h,
                                         const SolverCaps& caps = SolverCaps::from_env());

enum class TwinKind { true_twin, false_twin };

/// gamma_dR(G) <= gamma_dR(H) <= gamma_dR(G) + 1 (true twin) or + 2 (false twin).
BoundReport check_twin(const Graph& g, Vertex u, TwinKind kind, const SolverCaps& caps = SolverCaps::from_env());

struct Realization {
  Graph graph;
  long long expected_gamma_dr = 0;
  /// The construction's labeling; independent of any solver.
  DRLabeling witness;
};

/// (K_{1,m} + (n-m-1)K1) corona K1, expected gamma_dR = 3n - m.
/// Base vertices: star center 0, leaves 1..m, isolated m+1..n-1; the pendant
/// of base vertex i is n+i.
Realization build_corona_realization(int n, int m);

struct RomanPairRealization {
  Graph graph;
  long long expected_gamma_r = 0;
  long long expected_gamma_dr = 0;
  RomanLabeling roman_witness;
  DRLabeling double_roman_witness;
};

/// Bipartite graph with expected (gamma_R, gamma_dR) = (floor(b/2) + i, b).
/// X = {x_1..x_h} at indices 0..h-1 with h = floor(b/2); for each pair
/// (x_j, x_k) with 1 <= j <= i and j < k <= h, two Y-vertices adjacent to
/// both, appended in pair order; for odd b two pendants on x_1 come last.
/// Requires h >= 2 and 1 <= i <= h - 1.
RomanPairRealization build_roman_pair_graph(int b, int i);

struct PairScanResult {
  long long a = 0;
  long long b = 0;
  int n_max = 0;
  bool connected_only = true;
  std::optional<Graph> found;
  /// Graphs that passed the connectivity filter, counted in enumeration order
  /// up to and including the hit (or all of them when nothing is found).
  std::uint64_t graphs_scanned = 0;
};

/// Scans all labeled graphs with 1..n_max vertices in (n, edge mask) order
/// and returns the first with (gamma_R, gamma_dR) = (a, b). The result does
/// not depend on `threads`.
PairScanResult scan_pair_realizability(long long a, long long b, int n_max, bool connected_only = true,
                                       unsigned threads = 1);

}  // namespace drd
