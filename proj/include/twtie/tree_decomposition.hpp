#pragma once

#include <vector>

#include "twtie/check.hpp"
#include "twtie/graph.hpp"
#include "twtie/vertex_set.hpp"

namespace twtie {

// A tree of bags. Nodes are 0..node_count-1; tree_edges must form a tree.
// Valid for a graph g when every vertex of g occupies a non-empty connected
// subtree of nodes and every edge of g is contained in some bag.
// Width = max bag size - 1.
struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<Edge> tree_edges;

  int node_count() const { return static_cast<int>(bags.size()); }
  int width() const;  // -1 for an all-empty decomposition
};

// Returns the width if the decomposition is valid for g, otherwise the first
// violated condition (malformed tree, disconnected vertex subtree, uncovered
// edge) with a witness.
Result<int> validate_td(const Graph& g, const TreeDecomposition& td);

// Rewrites td into one of equal width where every bag has exactly width+1
// vertices and adjacent bags exchange exactly one vertex (|X-Y| = |Y-X| = 1).
// Three phases run to a fixpoint: grow small bags from a full neighbor,
// subdivide tree edges with |X-Y| > 1, contract tree edges with equal bags.
// Throws input_error if td does not validate for g.
TreeDecomposition normalize_td(const Graph& g, const TreeDecomposition& td);

bool is_normalized(const TreeDecomposition& td);

}  // namespace twtie
