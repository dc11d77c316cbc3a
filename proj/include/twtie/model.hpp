#pragma once

#include <vector>

#include "twtie/check.hpp"
#include "twtie/graph.hpp"
#include "twtie/vertex_set.hpp"

namespace twtie {

// A minor model: one branch set in the host per pattern vertex. Branches
// must be non-empty, pairwise disjoint and connected in the host, and every
// pattern edge needs a host edge between the corresponding branches.
struct Model {
  Graph host;
  Graph pattern;
  std::vector<VertexSet> branches;
};

// Checks all model invariants; the witness names the violated branch or
// pattern edge. Throws input_error on out-of-range indices.
Check validate_model(const Model& m);

}  // namespace twtie
