#pragma once

#include <optional>
#include <vector>

#include "twtie/graph.hpp"
#include "twtie/tree_decomposition.hpp"

namespace twtie {

// A perfect elimination ordering of g if g is chordal, otherwise nullopt.
// Found by maximum-cardinality search followed by a verification pass that
// each vertex's later neighbors form a clique.
std::optional<std::vector<int>> peo(const Graph& g);

// The supergraph of g with an edge uv whenever u and v share a bag of td.
// Always chordal. Its largest clique is bounded by the largest bag.
// Throws input_error if td does not validate for g.
Graph chordal_completion(const Graph& g, const TreeDecomposition& td);

// True iff g is K_{k+1} or g has a k-simplicial vertex v (degree k with a
// clique neighborhood) such that g - v is a k-tree. Greedy repeated deletion
// is exact because simplicial deletions commute.
bool is_k_tree(const Graph& g, int k);

}  // namespace twtie
