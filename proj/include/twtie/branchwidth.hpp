#pragma once

#include <optional>

#include "twtie/branch_decomposition.hpp"
#include "twtie/graph.hpp"

namespace twtie {

struct BranchwidthResult {
  int width = 0;
  // Absent exactly when |E(g)| <= 1 (branchwidth defined as 0 there).
  std::optional<BranchDecomposition> bd;
};

// Exact branchwidth by dynamic programming over edge subsets:
//   f(S) = max(boundary(S), min over proper splits T of max(f(T), f(S\T)))
// where boundary(S) counts vertices with incident edges both inside and
// outside S. A realizing decomposition is reconstructed from the optimal
// splits; ties prefer the lexicographically least submask containing the
// lowest edge, so the result is deterministic.
//
// Throws budget_error when |E(g)| > max_edges.
BranchwidthResult exact_branchwidth(const Graph& g, int max_edges = 12);

constexpr int kDefaultBranchwidthBudget = 12;

}  // namespace twtie
