#pragma once

#include "twtie/bramble.hpp"
#include "twtie/check.hpp"
#include "twtie/graph.hpp"

namespace twtie {

// A family of connected vertex sets in which every three elements A, B, C
// admit a common vertex or an edge with an endpoint in each of them. Triples
// are checked unordered with repetition allowed (the stricter reading; it
// subsumes the pairwise-touching bramble condition via {A, A, B}).
struct Tangle {
  std::vector<VertexSet> elements;
};

// Checks the triple condition over all unordered triples with repetition,
// returning a violating triple on failure.
Check validate_tangle(const Graph& g, const Tangle& t);

// Builds a tangle of order at least ceil(k/2) from a bramble of order at
// least k: for every X with |X| < k/2, X misses some element, so exactly one
// component of g - X confines an element; the tangle collects these
// confining components (deduplicated). k <= 1 is rejected as degenerate
// (it would produce an empty family). Throws budget_error when the subset
// enumeration is too large, input_error when b is invalid or has order < k.
Tangle tangle_from_bramble(const Graph& g, const Bramble& b, int k);

}  // namespace twtie
