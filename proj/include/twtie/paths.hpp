#pragma once

#include <vector>

#include "twtie/graph.hpp"
#include "twtie/vertex_set.hpp"

namespace twtie {

struct PathFamily {
  int count = 0;
  // Each path is a vertex sequence from an a-vertex to a b-vertex. A vertex
  // in a ∩ b appears as a singleton path.
  std::vector<std::vector<int>> paths;
};

// Maximum number of pairwise vertex-disjoint a-b paths whose internal
// vertices avoid forbidden_internal, plus one witness family. Endpoints are
// always permitted, even when listed in forbidden_internal. Realized as
// unit-vertex-capacity max flow; neighbor scans are in ascending order, so
// the witness family is deterministic.
PathFamily disjoint_paths(const Graph& g, const VertexSet& a,
                          const VertexSet& b,
                          const VertexSet& forbidden_internal);

// Variant used by the external k-connected check: edges inside g[s] are
// dropped from the network unless they join a to b directly.
PathFamily disjoint_paths_avoiding_edges(const Graph& g, const VertexSet& a,
                                         const VertexSet& b,
                                         const VertexSet& forbidden_internal,
                                         const VertexSet& edge_forbidden_set);

}  // namespace twtie
