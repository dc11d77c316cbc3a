#pragma once

#include <vector>

#include "twtie/check.hpp"
#include "twtie/graph.hpp"
#include "twtie/tree_decomposition.hpp"

namespace twtie {

// A tree in which every node has degree 3 or 1, together with a bijection
// from the edges of the graph onto the leaves. leaf_of[i] is the leaf node
// assigned to the i-th edge of the graph's canonical edge list. Defined only
// for graphs with at least two edges; branchwidth is 0 below that.
//
// The order of a tree edge e counts the vertices across e: those with
// incident graph edges mapped to leaves on both sides of T - e. (Some texts
// count edges across instead; vertex counting is what the width bounds
// below rely on.) Width = max order over tree edges.
struct BranchDecomposition {
  int nodes = 0;
  std::vector<Edge> tree_edges;
  std::vector<int> leaf_of;

  int node_count() const { return nodes; }
};

// Returns the width if bd is structurally valid for g (degree condition,
// bijection onto leaves). Throws input_error when |E(g)| < 2.
Result<int> validate_bd(const Graph& g, const BranchDecomposition& bd);

// Tree decomposition -> branch decomposition of width at most width(td)+1.
// Contracts bags contained in a neighbor, attaches one leaf bag {v,w} per
// graph edge, prunes leaves that carry no edge, splices out degree-2 nodes,
// then splits nodes of degree > 3 (the split node receives the bag
// B_x ∩ (B_y ∪ B_z), which keeps the width argument intact).
// Throws input_error when |E(g)| < 2 or td is invalid.
BranchDecomposition td_to_bd(const Graph& g, const TreeDecomposition& td);

// Branch decomposition of width k -> tree decomposition with
// width+1 <= max{2, (3/2)k}. Leaf nodes receive the endpoints of their edge;
// internal nodes receive every vertex across an incident tree edge. Isolated
// vertices of g are appended in singleton bags hung off node 0.
TreeDecomposition bd_to_td(const Graph& g, const BranchDecomposition& bd);

}  // namespace twtie
