#include "twtie/tree_decomposition.hpp"

#include <algorithm>
#include <numeric>

#include "twtie/errors.hpp"

namespace twtie {

int TreeDecomposition::width() const {
  int mx = 0;
  for (const auto& b : bags) mx = std::max(mx, b.size());
  return mx - 1;
}

Result<int> validate_td(const Graph& g, const TreeDecomposition& td) {
  using R = Result<int>;
  int t = td.node_count();
  if (t == 0) return R::failure("malformed tree: no nodes");
  if (static_cast<int>(td.tree_edges.size()) != t - 1)
    return R::failure("malformed tree: " +
                      std::to_string(td.tree_edges.size()) + " edges for " +
                      std::to_string(t) + " nodes");
  std::vector<std::vector<int>> adj(t);
  for (auto [x, y] : td.tree_edges) {
    if (x < 0 || x >= t || y < 0 || y >= t || x == y)
      return R::failure("malformed tree: bad edge (" + std::to_string(x) +
                        ", " + std::to_string(y) + ")");
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  {  // connectivity (with t-1 edges this also rules out cycles)
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

  int n = g.vertex_count();
  for (int x = 0; x < t; ++x)
    for (int v : td.bags[x])
      if (v < 0 || v >= n)
        return R::failure("bag " + std::to_string(x) +
                          " contains out-of-range vertex " +
                          std::to_string(v));

  // Every vertex occupies a non-empty connected set of nodes.
  for (int v = 0; v < n; ++v) {
    std::vector<int> holders;
    for (int x = 0; x < t; ++x)
      if (td.bags[x].contains(v)) holders.push_back(x);
    if (holders.empty())
      return R::failure("vertex " + std::to_string(v) + " is in no bag");
    std::vector<char> in(t, 0), seen(t, 0);
    for (int x : holders) in[x] = 1;
    std::vector<int> stack{holders[0]};
    seen[holders[0]] = 1;
    int cnt = 0;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      ++cnt;
      for (int y : adj[x])
        if (in[y] && !seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
    if (cnt != static_cast<int>(holders.size()))
      return R::failure("vertex " + std::to_string(v) +
                        " occupies a disconnected set of nodes");
  }

  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (int x = 0; x < t && !covered; ++x)
      covered = td.bags[x].contains(u) && td.bags[x].contains(v);
    if (!covered)
      return R::failure("edge (" + std::to_string(u) + ", " +
                        std::to_string(v) + ") is in no bag");
  }
  return R::success(td.width());
}

bool is_normalized(const TreeDecomposition& td) {
  if (td.bags.empty()) return false;
  int size0 = td.bags[0].size();
  for (const auto& b : td.bags)
    if (b.size() != size0) return false;
  for (auto [x, y] : td.tree_edges)
    if (td.bags[x].set_minus(td.bags[y]).size() != 1) return false;
  return true;
}

namespace {

// Mutable scratch form: adjacency lists plus alive flags, so subdivisions
// and contractions are cheap.
struct Scratch {
  std::vector<VertexSet> bags;
  std::vector<std::vector<int>> adj;
  std::vector<char> alive;

  void detach(int x, int y) {
    adj[x].erase(std::find(adj[x].begin(), adj[x].end(), y));
    adj[y].erase(std::find(adj[y].begin(), adj[y].end(), x));
  }

  TreeDecomposition finish() const {
    std::vector<int> id(bags.size(), -1);
    TreeDecomposition out;
    for (std::size_t x = 0; x < bags.size(); ++x)
      if (alive[x]) {
        id[x] = out.node_count();
        out.bags.push_back(bags[x]);
      }
    for (std::size_t x = 0; x < bags.size(); ++x)
      if (alive[x])
        for (int y : adj[x])
          if (id[x] < id[y]) out.tree_edges.push_back({id[x], id[y]});
    return out;
  }
};

}  // namespace

TreeDecomposition normalize_td(const Graph& g, const TreeDecomposition& td) {
  auto valid = validate_td(g, td);
  if (!valid.ok())
    throw input_error("normalize_td: invalid decomposition: " + valid.error);
  int target = *valid + 1;  // every bag will reach this size

  Scratch s;
  s.bags = td.bags;
  s.adj.resize(td.node_count());
  s.alive.assign(td.node_count(), 1);
  for (auto [x, y] : td.tree_edges) {
    s.adj[x].push_back(y);
    s.adj[y].push_back(x);
  }

  bool changed = true;
  while (changed) {
    changed = false;

    // Grow: a full bag adjacent to a smaller one donates a vertex. The tree
    // is connected, so while small bags remain such a pair exists.
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t x = 0; x < s.bags.size() && !grew; ++x) {
        if (!s.alive[x] || s.bags[x].size() != target) continue;
        for (int y : s.adj[x]) {
          if (s.bags[y].size() >= target) continue;
          VertexSet extra = s.bags[x].set_minus(s.bags[y]);
          s.bags[y].insert(extra.min());
          grew = true;
          changed = true;
          break;
        }
      }
    }

    // Subdivide edges whose bags differ in more than one vertex.
    for (std::size_t x = 0; x < s.bags.size(); ++x) {
      if (!s.alive[x]) continue;
      for (std::size_t j = 0; j < s.adj[x].size(); ++j) {
        int y = s.adj[x][j];
        VertexSet xy = s.bags[x].set_minus(s.bags[y]);
        if (xy.size() <= 1) continue;
        VertexSet yx = s.bags[y].set_minus(s.bags[x]);
        VertexSet mid = s.bags[x];
        mid.erase(xy.min());
        mid.insert(yx.min());
        int z = static_cast<int>(s.bags.size());
        s.bags.push_back(mid);
        s.adj.push_back({static_cast<int>(x), y});
        s.alive.push_back(1);
        s.adj[x][j] = z;
        auto& ya = s.adj[y];
        *std::find(ya.begin(), ya.end(), static_cast<int>(x)) = z;
        changed = true;
        --j;  // re-examine the new edge (x, z)
      }
    }

    // Contract edges joining equal bags.
    for (std::size_t x = 0; x < s.bags.size(); ++x) {
      if (!s.alive[x]) continue;
      for (std::size_t j = 0; j < s.adj[x].size(); ++j) {
        int y = s.adj[x][j];
        if (!(s.bags[x] == s.bags[y])) continue;
        s.detach(x, y);
        for (int z : s.adj[y]) {
          auto& za = s.adj[z];
          *std::find(za.begin(), za.end(), y) = static_cast<int>(x);
          s.adj[x].push_back(z);
        }
        s.adj[y].clear();
        s.alive[y] = 0;
        changed = true;
        j = static_cast<std::size_t>(-1);  // restart x's neighbor scan
      }
    }
  }

  return s.finish();
}

}  // namespace twtie
