#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drd/graph.hpp"
#include "drd/labeling.hpp"

namespace drd {

// Closed-form double Roman domination number of a constructed graph, with the
// explicit minimum labeling when a construction is known. `graph` is the
// instance the value refers to, on canonical indexing.
struct FormulaResult {
  std::string family;
  std::vector<int> params;
  long long value = 0;
  std::optional<DRLabeling> witness;
  std::string theorem;
  Graph graph{1};
};

/// n if n mod 6 in {0,2,3,4}, else n+1. No witness.
FormulaResult gamma_dr_cycle(int n);

/// floor((3n+4)/2) for the 2 x n grid, n >= 1 and n != 2 (the n = 2 grid is
/// C4; use gamma_dr_cycle(4)). Throws ExcludedCase for n = 2.
///
/// Witness: 3 at (1, 3+4k) and (2, 1+4k); for even n these stop strictly
/// before column n and column n carries a 2 in row 1 (n = 2 mod 4) or
/// row 2 (n = 0 mod 4).
FormulaResult gamma_dr_grid2(int n);

/// 3|V(g)| for g corona h whenever h is not K1. The witness puts 3 on every
/// base vertex. Throws ExcludedCase when |V(h)| = 1.
FormulaResult gamma_dr_corona_nontrivial(const Graph& g, const Graph& h);

/// g corona K1 for g a path, cycle, complete or complete bipartite graph.
/// `family` must be one of those kinds with valid params.
FormulaResult gamma_dr_corona_k1(const FamilySpec& family);

/// 5|V(g)| for (g corona K1) corona K1; 3 on the original vertices and 2 on
/// the outer leaves.
FormulaResult gamma_dr_double_corona(const Graph& g);

}  // namespace drd
