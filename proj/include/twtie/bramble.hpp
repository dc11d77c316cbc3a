#pragma once

#include <optional>
#include <vector>

#include "twtie/check.hpp"
#include "twtie/graph.hpp"
#include "twtie/tree_decomposition.hpp"
#include "twtie/vertex_set.hpp"

namespace twtie {

// A family of connected vertex sets that pairwise touch: two elements touch
// when they share a vertex or some edge joins them. Elements are stored as
// vertex sets; the induced subgraph is the element.
struct Bramble {
  std::vector<VertexSet> elements;
};

struct HittingSet {
  VertexSet vertices;
  int order() const { return vertices.size(); }
};

// Each element non-empty, connected, within range, and every pair touching.
// On failure the witness names the offending element or pair.
Check validate_bramble(const Graph& g, const Bramble& b);

// Exact minimum hitting set by branch and bound: repeatedly branch on the
// vertices of an uncovered element, exploring elements in order of
// increasing size (fail-fast on disjoint elements) and pruning with a
// greedy disjoint-element lower bound. Deterministic witness.
// Throws input_error if b is invalid, budget_error when n > 64.
std::pair<int, HittingSet> bramble_order(const Graph& g, const Bramble& b);

// The k x k grid together with its order-(k+1) bramble: all (k-1)^2 crosses
// of the top-left (k-1) x (k-1) subgrid (one row plus one column of it),
// the bottom row X, and the right column Y without its bottom vertex.
std::pair<Graph, Bramble> grid_bramble(int k);

// A bag of td that intersects every element of b. Such a bag always exists
// for valid inputs: the node subtrees touched by the elements pairwise
// intersect, so by the Helly property of subtrees of a tree they share a
// node. Found by walking the tree: from a bag missing some element, step
// toward the subtree of the first missed element. Throws internal_error if
// the walk fails (impossible for valid inputs).
VertexSet hitting_bag(const Graph& g, const Bramble& b,
                      const TreeDecomposition& td);

// The unique component of g - x that entirely contains at least one element
// of b; nullopt when no component does (x is then a hitting set). Two such
// components would contain non-touching elements, so on a valid bramble
// uniqueness holds; violation throws input_error.
std::optional<VertexSet> confining_component(const Graph& g, const Bramble& b,
                                             const VertexSet& x);

}  // namespace twtie
