#include "twtie/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "twtie/errors.hpp"

namespace twtie {

namespace {

// Vertices outside S ∪ {v} reachable from v through S: the neighbors v
// acquires when eliminated right after the set S.
std::uint64_t elimination_neighbors(const std::vector<std::uint64_t>& adj,
                                    std::uint64_t s, int v) {
  std::uint64_t outside = adj[v] & ~s;
  std::uint64_t frontier = adj[v] & s;
  std::uint64_t seen = frontier;
  while (frontier) {
    int w = std::countr_zero(frontier);
    frontier &= frontier - 1;
    outside |= adj[w] & ~s;
    std::uint64_t fresh = adj[w] & s & ~seen;
    seen |= fresh;
    frontier |= fresh;
  }
  return outside & ~(std::uint64_t{1} << v);
}

}  // namespace

TreewidthResult exact_treewidth(const Graph& g, int max_n) {
  int n = g.vertex_count();
  if (n == 0) throw input_error("treewidth of the empty graph is undefined");
  if (n > max_n)
    throw budget_error("exact_treewidth: " + std::to_string(n) +
                       " vertices exceeds budget " + std::to_string(max_n));
  if (n > 22)
    throw budget_error("exact_treewidth: subset table for n > 22 vertices");

  auto adj = g.adjacency_masks();
  std::uint64_t full = (n == 64) ? ~std::uint64_t{0}
                                 : ((std::uint64_t{1} << n) - 1);

  // best[S] = optimal cost of eliminating the vertices outside S, given the
  // vertices of S are already gone. Filled in decreasing mask order, since
  // S ∪ {v} is numerically larger than S.
  std::vector<std::int8_t> best(std::size_t{1} << n, 0);
  for (std::uint64_t s = full; s-- > 0;) {
    int mn = 127;
    std::uint64_t rest = full & ~s;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      int cost = std::popcount(elimination_neighbors(adj, s, v));
      cost = std::max(cost, static_cast<int>(best[s | (std::uint64_t{1} << v)]));
      mn = std::min(mn, cost);
    }
    best[s] = static_cast<std::int8_t>(mn);
  }
  int width = best[0];

  // Lexicographically least optimal elimination ordering.
  std::vector<int> order;
  std::uint64_t s = 0;
  for (int i = 0; i < n; ++i) {
    for (int v = 0; v < n; ++v) {
      std::uint64_t bit = std::uint64_t{1} << v;
      if (s & bit) continue;
      int cost = std::popcount(elimination_neighbors(adj, s, v));
      if (std::max(cost, static_cast<int>(best[s | bit])) <= width) {
        order.push_back(v);
        s |= bit;
        break;
      }
    }
  }

  // One bag per vertex: itself plus its elimination neighbors. Each node
  // hangs off the node of its first-eliminated elimination neighbor; bags
  // with no later neighbor attach to the next vertex in the ordering.
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[order[i]] = i;
  TreeDecomposition td;
  td.bags.resize(n);
  std::uint64_t eliminated = 0;
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    std::uint64_t nb = elimination_neighbors(adj, eliminated, v);
    td.bags[i] = VertexSet::from_mask(nb | (std::uint64_t{1} << v));
    if (nb != 0) {
      int parent_vertex = -1;
      for (std::uint64_t m = nb; m; m &= m - 1) {
        int w = std::countr_zero(m);
        if (parent_vertex < 0 || position[w] < position[parent_vertex])
          parent_vertex = w;
      }
      td.tree_edges.push_back({i, position[parent_vertex]});
    } else if (i + 1 < n) {
      td.tree_edges.push_back({i, i + 1});
    }
    eliminated |= std::uint64_t{1} << v;
  }

  // Contract bags contained in a neighboring bag, so e.g. complete graphs
  // come back as a single node.
  std::vector<char> alive(n, 1);
  std::vector<std::vector<int>> tadj(n);
  for (auto [x, y] : td.tree_edges) {
    tadj[x].push_back(y);
    tadj[y].push_back(x);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n && !changed; ++x) {
      if (!alive[x]) continue;
      for (int y : tadj[x]) {
        if (!td.bags[x].subset_of(td.bags[y])) continue;
        for (int z : tadj[x])
          if (z != y) {
            tadj[z].erase(std::find(tadj[z].begin(), tadj[z].end(), x));
            tadj[z].push_back(y);
            tadj[y].push_back(z);
          }
        tadj[y].erase(std::find(tadj[y].begin(), tadj[y].end(), x));
        tadj[x].clear();
        alive[x] = 0;
        changed = true;
        break;
      }
    }
  }
  TreeDecomposition out;
  std::vector<int> id(n, -1);
  for (int x = 0; x < n; ++x)
    if (alive[x]) {
      id[x] = out.node_count();
      out.bags.push_back(td.bags[x]);
    }
  for (int x = 0; x < n; ++x)
    if (alive[x])
      for (int y : tadj[x])
        if (id[x] < id[y]) out.tree_edges.push_back({id[x], id[y]});

  return {width, std::move(out)};
}

}  // namespace twtie
