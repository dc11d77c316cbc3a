#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "twtie/vertex_set.hpp"

namespace twtie {

using Edge = std::pair<int, int>;  // stored with first < second

// Immutable simple undirected graph on vertices 0..n-1. Self-loops are
// rejected; duplicate edges are merged on construction. All operations on
// graphs are pure, so concurrent use is safe.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;
  bool adjacent(int u, int v) const;

  // Index of edge {u, v} in the canonical sorted edge list, or -1.
  int edge_index(int u, int v) const;

  // Per-vertex neighborhoods as bitmasks; requires n <= 64.
  std::vector<std::uint64_t> adjacency_masks() const;

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && edges_ == o.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;                 // sorted lexicographically
  std::vector<std::vector<int>> adj_;       // sorted neighbor lists
};

// Connected components of g - removed, each sorted, ordered by minimum
// vertex. Throws input_error on out-of-range vertices in removed.
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed);

// True iff s is non-empty and g[s] is connected. The empty set counts as
// not connected, so degenerate certificate elements are rejected.
bool is_connected_subset(const Graph& g, const VertexSet& s);

// The cartesian product G x K_2: two copies of g, vertex (v, i) encoded as
// v + i*n, plus the perfect matching between corresponding vertices.
Graph cartesian_with_k2(const Graph& g);

// True iff g is connected and has exactly n-1 edges.
bool is_tree(const Graph& g);

}  // namespace twtie
