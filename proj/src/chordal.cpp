#include "twtie/chordal.hpp"

#include <algorithm>

#include "twtie/errors.hpp"

namespace twtie {

std::optional<std::vector<int>> peo(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return std::vector<int>{};

  // Maximum-cardinality search; visit order reversed is a perfect
  // elimination ordering iff the graph is chordal.
  std::vector<int> weight(n, 0), visit;
  std::vector<char> done(n, 0);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!done[v] && (pick < 0 || weight[v] > weight[pick])) pick = v;
    done[pick] = 1;
    visit.push_back(pick);
    for (int w : g.neighbors(pick))
      if (!done[w]) ++weight[w];
  }
  std::vector<int> order(visit.rbegin(), visit.rend());

  // Verification pass: the later neighbors of each vertex must be a clique.
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  for (int i = 0; i < n; ++i) {
    std::vector<int> later;
    for (int w : g.neighbors(order[i]))
      if (pos[w] > i) later.push_back(w);
    for (std::size_t a = 0; a < later.size(); ++a)
      for (std::size_t b = a + 1; b < later.size(); ++b)
        if (!g.adjacent(later[a], later[b])) return std::nullopt;
  }
  return order;
}

Graph chordal_completion(const Graph& g, const TreeDecomposition& td) {
  auto valid = validate_td(g, td);
  if (!valid.ok())
    throw input_error("chordal_completion: invalid decomposition: " +
                      valid.error);
  std::vector<Edge> edges = g.edges();
  for (const auto& bag : td.bags) {
    const auto& vs = bag.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        edges.push_back({vs[i], vs[j]});
  }
  return Graph(g.vertex_count(), std::move(edges));
}

bool is_k_tree(const Graph& g, int k) {
  if (k < 1) throw input_error("is_k_tree requires k >= 1");
  int n = g.vertex_count();
  if (n < k + 1) return false;

  // Peel k-simplicial vertices greedily; deletions commute, so reaching
  // K_{k+1} this way is equivalent to the recursive definition.
  std::vector<char> alive(n, 1);
  int remaining = n;
  auto alive_degree = [&](int v) {
    int d = 0;
    for (int w : g.neighbors(v)) d += alive[w];
    return d;
  };
  auto simplicial = [&](int v) {
    if (alive_degree(v) != k) return false;
    std::vector<int> nb;
    for (int w : g.neighbors(v))
      if (alive[w]) nb.push_back(w);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (!g.adjacent(nb[i], nb[j])) return false;
    return true;
  };

  while (remaining > k + 1) {
    int pick = -1;
    for (int v = 0; v < n && pick < 0; ++v)
      if (alive[v] && simplicial(v)) pick = v;
    if (pick < 0) return false;
    alive[pick] = 0;
    --remaining;
  }
  // Base case: the k+1 survivors must form a clique.
  for (int u = 0; u < n; ++u) {
    if (!alive[u]) continue;
    if (alive_degree(u) != k) return false;
  }
  return true;
}

}  // namespace twtie
