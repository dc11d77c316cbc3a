#include "twtie/branch_decomposition.hpp"

#include <algorithm>

#include "twtie/errors.hpp"

namespace twtie {

namespace {

// Side labels (0/1) of all nodes relative to tree edge (a, b): nodes on a's
// side of T - ab get 0. adj must describe a tree.
std::vector<char> edge_sides(const std::vector<std::vector<int>>& adj, int a,
                             int b) {
  std::vector<char> side(adj.size(), 1);
  std::vector<int> stack{a};
  side[a] = 0;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x]) {
      if ((x == a && y == b) || (x == b && y == a)) continue;
      if (side[y] == 1 && y != b) {
        side[y] = 0;
        stack.push_back(y);
      }
    }
  }
  return side;
}

}  // namespace

Result<int> validate_bd(const Graph& g, const BranchDecomposition& bd) {
  using R = Result<int>;
  int m = g.edge_count();
  if (m < 2)
    throw input_error("branch decompositions need at least two edges");
  int t = bd.node_count();
  if (t < 2) return R::failure("malformed tree: fewer than two nodes");
  if (static_cast<int>(bd.tree_edges.size()) != t - 1)
    return R::failure("malformed tree: edge count");
  std::vector<std::vector<int>> adj(t);
  for (auto [x, y] : bd.tree_edges) {
    if (x < 0 || x >= t || y < 0 || y >= t || x == y)
      return R::failure("malformed tree: bad edge");
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  {
    std::vector<char> seen(t, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 0;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      ++cnt;
      for (int y : adj[x])
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
    if (cnt != t) return R::failure("malformed tree: not connected");
  }
  for (int x = 0; x < t; ++x)
    if (adj[x].size() != 1 && adj[x].size() != 3)
      return R::failure("node " + std::to_string(x) + " has degree " +
                        std::to_string(adj[x].size()));

  if (static_cast<int>(bd.leaf_of.size()) != m)
    return R::failure("leaf map does not cover the edge list");
  std::vector<int> claims(t, 0);
  for (int e = 0; e < m; ++e) {
    int leaf = bd.leaf_of[e];
    if (leaf < 0 || leaf >= t || adj[leaf].size() != 1)
      return R::failure("edge " + std::to_string(e) +
                        " is mapped to a non-leaf");
    ++claims[leaf];
  }
  for (int x = 0; x < t; ++x) {
    if (adj[x].size() == 1 && claims[x] != 1)
      return R::failure("leaf " + std::to_string(x) + " claimed " +
                        std::to_string(claims[x]) + " times");
  }

  // Width: for each tree edge, count vertices with incident graph edges
  // mapped to leaves on both sides.
  int width = 0;
  int n = g.vertex_count();
  for (auto [a, b] : bd.tree_edges) {
    auto side = edge_sides(adj, a, b);
    std::vector<char> seen0(n, 0), seen1(n, 0);
    for (int e = 0; e < m; ++e) {
      auto [u, v] = g.edges()[e];
      auto& mark = side[bd.leaf_of[e]] == 0 ? seen0 : seen1;
      mark[u] = mark[v] = 1;
    }
    int across = 0;
    for (int v = 0; v < n; ++v) across += seen0[v] && seen1[v];
    width = std::max(width, across);
  }
  return R::success(width);
}

namespace {

struct BdScratch {
  std::vector<VertexSet> bags;
  std::vector<std::vector<int>> adj;
  std::vector<char> alive;
  std::vector<int> claimed_edge;  // graph edge index, or -1

  int degree(int x) const { return static_cast<int>(adj[x].size()); }

  int add_node(VertexSet bag) {
    bags.push_back(std::move(bag));
    adj.emplace_back();
    alive.push_back(1);
    claimed_edge.push_back(-1);
    return static_cast<int>(bags.size()) - 1;
  }

  void connect(int x, int y) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }

  void detach(int x, int y) {
    adj[x].erase(std::find(adj[x].begin(), adj[x].end(), y));
    adj[y].erase(std::find(adj[y].begin(), adj[y].end(), x));
  }
};

}  // namespace

BranchDecomposition td_to_bd(const Graph& g, const TreeDecomposition& td) {
  if (g.edge_count() < 2)
    throw input_error("td_to_bd needs at least two edges (bw is 0 below)");
  auto valid = validate_td(g, td);
  if (!valid.ok())
    throw input_error("td_to_bd: invalid decomposition: " + valid.error);

  BdScratch s;
  s.bags = td.bags;
  s.adj.resize(td.node_count());
  s.alive.assign(td.node_count(), 1);
  s.claimed_edge.assign(td.node_count(), -1);
  for (auto [x, y] : td.tree_edges) s.connect(x, y);

  // Contract bags contained in a neighbor (the lean form the construction
  // assumes).
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x < s.bags.size() && !changed; ++x) {
      if (!s.alive[x]) continue;
      for (int y : s.adj[x]) {
        if (!s.bags[x].subset_of(s.bags[y])) continue;
        auto others = s.adj[x];
        for (int z : others)
          if (z != y) {
            s.detach(static_cast<int>(x), z);
            s.connect(y, z);
          }
        s.detach(static_cast<int>(x), y);
        s.alive[x] = 0;
        changed = true;
        break;
      }
    }
  }

  // One leaf per graph edge. An existing unclaimed leaf whose bag is exactly
  // the edge is reused; otherwise a fresh leaf hangs off the first bag
  // covering the edge.
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges()[e];
    VertexSet ends{u, v};
    int host = -1;
    for (std::size_t x = 0; x < s.bags.size(); ++x)
      if (s.alive[x] && ends.subset_of(s.bags[x])) {
        host = static_cast<int>(x);
        break;
      }
    if (host < 0) throw internal_error("td_to_bd: edge lost its bag");
    if (s.degree(host) <= 1 && s.bags[host] == ends &&
        s.claimed_edge[host] < 0) {
      s.claimed_edge[host] = e;
    } else {
      int leaf = s.add_node(ends);
      s.claimed_edge[leaf] = e;
      s.connect(host, leaf);
    }
  }

  // Prune unclaimed leaves (old bags that carry no edge).
  changed = true;
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x < s.bags.size(); ++x)
      if (s.alive[x] && s.degree(static_cast<int>(x)) == 1 &&
          s.claimed_edge[x] < 0) {
        s.detach(static_cast<int>(x), s.adj[x][0]);
        s.alive[x] = 0;
        changed = true;
      }
  }

  // Splice out degree-2 nodes; the leaf partition across the merged edge is
  // unchanged, so the width argument is unaffected.
  for (std::size_t x = 0; x < s.bags.size(); ++x)
    if (s.alive[x] && s.degree(static_cast<int>(x)) == 2) {
      int a = s.adj[x][0], b = s.adj[x][1];
      s.detach(static_cast<int>(x), a);
      s.detach(static_cast<int>(x), b);
      s.connect(a, b);
      s.alive[x] = 0;
    }

  // Split nodes of degree > 3, three neighbors at a time.
  for (std::size_t x = 0; x < s.bags.size(); ++x) {
    while (s.alive[x] && s.degree(static_cast<int>(x)) > 3) {
      std::vector<int> nb = s.adj[x];
      std::sort(nb.begin(), nb.end());
      int y = nb[0], z = nb[1];
      VertexSet mid = s.bags[x].set_intersect(s.bags[y].set_union(s.bags[z]));
      int c = s.add_node(std::move(mid));
      s.detach(static_cast<int>(x), y);
      s.detach(static_cast<int>(x), z);
      s.connect(c, y);
      s.connect(c, z);
      s.connect(c, static_cast<int>(x));
    }
  }

  BranchDecomposition bd;
  std::vector<int> id(s.bags.size(), -1);
  for (std::size_t x = 0; x < s.bags.size(); ++x)
    if (s.alive[x]) {
      id[x] = bd.nodes++;
    }
  for (std::size_t x = 0; x < s.bags.size(); ++x)
    if (s.alive[x])
      for (int y : s.adj[x])
        if (id[x] < id[y]) bd.tree_edges.push_back({id[x], id[y]});
  bd.leaf_of.assign(g.edge_count(), -1);
  for (std::size_t x = 0; x < s.bags.size(); ++x)
    if (s.alive[x] && s.claimed_edge[x] >= 0)
      bd.leaf_of[s.claimed_edge[x]] = id[x];
  return bd;
}

TreeDecomposition bd_to_td(const Graph& g, const BranchDecomposition& bd) {
  auto valid = validate_bd(g, bd);
  if (!valid.ok())
    throw input_error("bd_to_td: invalid decomposition: " + valid.error);

  int t = bd.node_count();
  int n = g.vertex_count();
  std::vector<std::vector<int>> adj(t);
  for (auto [x, y] : bd.tree_edges) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }

  // Across set per tree edge.
  std::vector<VertexSet> across(bd.tree_edges.size());
  for (std::size_t i = 0; i < bd.tree_edges.size(); ++i) {
    auto [a, b] = bd.tree_edges[i];
    auto side = edge_sides(adj, a, b);
    std::vector<char> seen0(n, 0), seen1(n, 0);
    for (int e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.edges()[e];
      auto& mark = side[bd.leaf_of[e]] == 0 ? seen0 : seen1;
      mark[u] = mark[v] = 1;
    }
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if (seen0[v] && seen1[v]) vs.push_back(v);
    across[i] = VertexSet(vs);
  }

  TreeDecomposition td;
  td.bags.resize(t);
  td.tree_edges = bd.tree_edges;
  std::vector<char> is_leaf(t, 0);
  for (int x = 0; x < t; ++x) is_leaf[x] = adj[x].size() == 1;
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges()[e];
    td.bags[bd.leaf_of[e]] = VertexSet{u, v};
  }
  for (std::size_t i = 0; i < bd.tree_edges.size(); ++i) {
    auto [a, b] = bd.tree_edges[i];
    for (int x : {a, b})
      if (!is_leaf[x]) td.bags[x] = td.bags[x].set_union(across[i]);
  }

  // Isolated vertices are not across anything; append them in singleton
  // bags hung off node 0.
  std::vector<char> covered(n, 0);
  for (auto [u, v] : g.edges()) covered[u] = covered[v] = 1;
  for (int v = 0; v < n; ++v)
    if (!covered[v]) {
      td.bags.push_back(VertexSet{v});
      td.tree_edges.push_back({0, td.node_count() - 1});
    }
  return td;
}

}  // namespace twtie
