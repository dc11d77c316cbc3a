#pragma once

#include "twtie/graph.hpp"
#include "twtie/tree_decomposition.hpp"

namespace twtie {

struct TreewidthResult {
  int width = 0;
  TreeDecomposition td;
};

// Exact treewidth by dynamic programming over vertex subsets: for each set S
// of already-eliminated vertices, the best achievable cost of finishing the
// elimination is memoized; the cost of eliminating v after S is the number
// of vertices outside S reachable from v through S. The returned ordering is
// the lexicographically least optimal elimination ordering, so the
// decomposition is deterministic. Bags contained in a neighboring bag are
// contracted away afterwards.
//
// Throws budget_error when g has more than max_n vertices (the answer is
// never approximated), and input_error on the empty graph.
TreewidthResult exact_treewidth(const Graph& g, int max_n = 14);

constexpr int kDefaultTreewidthBudget = 14;

}  // namespace twtie
