#pragma once

#include "twtie/graph.hpp"
#include "twtie/model.hpp"
#include "twtie/tree_decomposition.hpp"

namespace twtie {

// Lexicographic product T[K_k]: vertex (x, i) encoded as x*k + i; a clique
// inside each copy and a complete bipartite K_{k,k} across each tree edge.
// Throws input_error when t is not a tree or k < 1.
Graph lex_product(const Graph& t, int k);

// Cartesian product T x K_k: edges (x,i)(x,j) for i != j and (x,i)(y,i) for
// tree edges xy. Same vertex encoding as lex_product.
Graph cart_product_tree(const Graph& t, int k);

struct ProductModel {
  Graph tree;
  int k = 0;
  Model model;
};

// Embeds g into T[K_{w+1}] where T is the tree underlying td and w its
// width: each bag injects into the slots 0..w, a vertex's slot is fixed at
// its bag nearest the root and inherited along its subtree, and the branch
// of v is {(x, slot(v)) : v in B_x}. Throws input_error if td is invalid.
ProductModel model_in_lex_product(const Graph& g, const TreeDecomposition& td);

// The explicit tree decomposition of lex_product(t, k): bag K_v at each
// original node and K_v ∪ K_w at the node subdividing tree edge vw. Width
// 2k-1 when t has an edge (and that is exact, since T[K_k] contains K_{2k}),
// k-1 for a single-node tree.
TreeDecomposition td_of_lex_product(const Graph& t, int k);

// Embeds g into T x K_{tw(g)+1}: takes a minimum-width tree decomposition,
// greedily colours the chordal completion along the reversed elimination
// ordering (at most tw+1 colours, as the completion is chordal with clique
// number tw+1), and assigns branch R_v = {(x, colour(v)) : v in B_x}.
// Throws budget_error when exact_treewidth is out of budget.
ProductModel model_in_cart_product(const Graph& g, int tw_budget = 14);

// The explicit tree decomposition of cart_product_tree(t, k), with each tree
// edge subdivided k times; bags interpolate from one endpoint's column to
// the other's one slot at a time. Width at most k.
TreeDecomposition td_of_cart_product(const Graph& t, int k);

}  // namespace twtie
