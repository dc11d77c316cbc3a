#pragma once

#include <optional>

#include "twtie/check.hpp"
#include "twtie/exec.hpp"
#include "twtie/graph.hpp"
#include "twtie/vertex_set.hpp"

namespace twtie {

// s is k-linked when for every X with fewer than k vertices some component
// of g - X contains more than half of s. On failure returns a violating X.
// Throws budget_error when the X enumeration is too large.
Check is_k_linked(const Graph& g, const VertexSet& s, int k);

struct LinkednessResult {
  int k = 0;
  VertexSet witness;  // lexicographically least maximizer
};

// Maximum k for which g contains a k-linked set, with witness.
// Throws budget_error when n > max_n.
LinkednessResult linkedness(const Graph& g, int max_n = 10,
                            Exec exec = Exec::Parallel);

constexpr int kDefaultLinkednessBudget = 10;

// s is well-linked when every pair A, B of equal-size subsets of s is joined
// by |A| vertex-disjoint paths; externally-well-linked additionally requires
// the paths to avoid s internally. Only disjoint pairs are enumerated:
// a vertex of A ∩ B is necessarily served by a singleton path, which reduces
// an intersecting pair (A, B) to the disjoint pair (A-B, B-A) in
// g - (A ∩ B). For the internal variant that makes the binding check the
// disjoint pair in g minus the rest of s; for the external variant the paths
// avoid all of s internally anyway. On failure the witness names a pair
// (A, B) and the achieved path count.
Check is_well_linked(const Graph& g, const VertexSet& s, bool external);

struct WellLinkedResult {
  int size = 0;
  VertexSet witness;  // lexicographically least maximum well-linked set
};

// Maximum size of a well-linked set. Throws budget_error when n > max_n.
WellLinkedResult well_linked_number(const Graph& g, int max_n = 9,
                                    Exec exec = Exec::Parallel);

constexpr int kDefaultWellLinkedBudget = 9;

// s is k-connected in g when |s| >= k and all equal-size subsets A, B of s
// with |A| <= k are joined by |A| vertex-disjoint paths. The external
// variant forbids internal vertices in s and edges of g[s] except as a
// direct first/last hop between A and B; edge avoidance is realized by
// dropping g[s]-internal edges from the flow network.
Check is_k_connected_set(const Graph& g, const VertexSet& s, int k,
                         bool external);

}  // namespace twtie
