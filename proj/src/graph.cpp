#include "twtie/graph.hpp"

#include <algorithm>

#include "twtie/errors.hpp"

namespace twtie {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw input_error("negative vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw input_error("edge endpoint out of range: (" + std::to_string(u) +
                        ", " + std::to_string(v) + ")");
    if (u == v) throw input_error("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  adj_.resize(n);
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (v < 0 || v >= n_)
    throw input_error("vertex " + std::to_string(v) + " out of range");
  return adj_[v];
}

int Graph::degree(int v) const {
  return static_cast<int>(neighbors(v).size());
}

bool Graph::adjacent(int u, int v) const {
  const auto& nb = neighbors(u);
  if (v < 0 || v >= n_)
    throw input_error("vertex " + std::to_string(v) + " out of range");
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return -1;
  return static_cast<int>(it - edges_.begin());
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
  if (n_ > 64) throw budget_error("adjacency masks need n <= 64");
  std::vector<std::uint64_t> m(n_, 0);
  for (auto [u, v] : edges_) {
    m[u] |= std::uint64_t{1} << v;
    m[v] |= std::uint64_t{1} << u;
  }
  return m;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
  removed.check_range(g.vertex_count(), "components");
  int n = g.vertex_count();
  std::vector<char> gone(n, 0), seen(n, 0);
  for (int v : removed) gone[v] = 1;
  std::vector<VertexSet> out;
  std::vector<int> stack, comp;
  for (int start = 0; start < n; ++start) {
    if (gone[start] || seen[start]) continue;
    comp.clear();
    stack.push_back(start);
    seen[start] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.neighbors(v)) {
        if (!gone[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    out.emplace_back(comp);
  }
  // Starts scan ascending, so components come out ordered by minimum vertex.
  return out;
}

bool is_connected_subset(const Graph& g, const VertexSet& s) {
  s.check_range(g.vertex_count(), "is_connected_subset");
  if (s.empty()) return false;
  std::vector<char> in(g.vertex_count(), 0), seen(g.vertex_count(), 0);
  for (int v : s) in[v] = 1;
  std::vector<int> stack{s.min()};
  seen[s.min()] = 1;
  int reached = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++reached;
    for (int w : g.neighbors(v)) {
      if (in[w] && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return reached == s.size();
}

Graph cartesian_with_k2(const Graph& g) {
  int n = g.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(2 * g.edge_count() + n);
  for (auto [u, v] : g.edges()) {
    edges.push_back({u, v});
    edges.push_back({u + n, v + n});
  }
  for (int v = 0; v < n; ++v) edges.push_back({v, v + n});
  return Graph(2 * n, std::move(edges));
}

bool is_tree(const Graph& g) {
  if (g.vertex_count() == 0) return false;
  if (g.edge_count() != g.vertex_count() - 1) return false;
  return is_connected_subset(g, VertexSet::full(g.vertex_count()));
}

}  // namespace twtie
