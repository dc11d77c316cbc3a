#include "twtie/bramble.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

#include "twtie/errors.hpp"
#include "twtie/families.hpp"

namespace twtie {

namespace {

bool touch(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (a.intersects(b)) return true;
  for (int v : a)
    for (int w : g.neighbors(v))
      if (b.contains(w)) return true;
  return false;
}

}  // namespace

Check validate_bramble(const Graph& g, const Bramble& b) {
  int n = g.vertex_count();
  for (std::size_t i = 0; i < b.elements.size(); ++i) {
    b.elements[i].check_range(n, "bramble element");
    if (!is_connected_subset(g, b.elements[i]))
      return Check::fail("element " + std::to_string(i) + " = " +
                         b.elements[i].str() +
                         (b.elements[i].empty() ? " is empty"
                                                : " is not connected"));
  }
  for (std::size_t i = 0; i < b.elements.size(); ++i)
    for (std::size_t j = i + 1; j < b.elements.size(); ++j)
      if (!touch(g, b.elements[i], b.elements[j]))
        return Check::fail("elements " + std::to_string(i) + " and " +
                           std::to_string(j) + " do not touch");
  return Check::pass();
}

namespace {

struct HittingSearch {
  int n;
  std::vector<std::uint64_t> elems;  // sorted by size then mask
  std::vector<std::uint64_t> vertex_hits_blocks;  // per vertex, per block
  int blocks;
  int best;
  std::uint64_t best_mask = 0;

  bool all_hit(const std::vector<std::uint64_t>& hit) const {
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (!(hit[i / 64] >> (i % 64) & 1)) return false;
    return true;
  }

  int first_unhit(const std::vector<std::uint64_t>& hit) const {
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (!(hit[i / 64] >> (i % 64) & 1)) return static_cast<int>(i);
    return -1;
  }

  // Greedy count of pairwise-disjoint unhit elements: any hitting set needs
  // one vertex per counted element.
  int lower_bound(const std::vector<std::uint64_t>& hit) const {
    std::uint64_t used = 0;
    int cnt = 0;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (hit[i / 64] >> (i % 64) & 1) continue;
      if (elems[i] & used) continue;
      used |= elems[i];
      ++cnt;
    }
    return cnt;
  }

  void run(std::vector<std::uint64_t>& hit, std::uint64_t chosen, int count) {
    int unhit = first_unhit(hit);
    if (unhit < 0) {
      if (count < best) {
        best = count;
        best_mask = chosen;
      }
      return;
    }
    if (count + lower_bound(hit) >= best) return;
    std::uint64_t candidates = elems[unhit];
    while (candidates) {
      int v = std::countr_zero(candidates);
      candidates &= candidates - 1;
      std::vector<std::uint64_t> next = hit;
      for (int bId = 0; bId < blocks; ++bId)
        next[bId] |= vertex_hits_blocks[static_cast<std::size_t>(v) * blocks +
                                        bId];
      run(next, chosen | (std::uint64_t{1} << v), count + 1);
    }
  }
};

}  // namespace

std::pair<int, HittingSet> bramble_order(const Graph& g, const Bramble& b) {
  auto check = validate_bramble(g, b);
  if (!check.ok) throw input_error("bramble_order: " + check.why);
  if (g.vertex_count() > 64)
    throw budget_error("bramble_order: n > 64");
  if (b.elements.empty()) return {0, HittingSet{}};

  HittingSearch search;
  search.n = g.vertex_count();
  for (const auto& e : b.elements) search.elems.push_back(e.mask());
  std::sort(search.elems.begin(), search.elems.end(),
            [](std::uint64_t a, std::uint64_t c) {
              int pa = std::popcount(a), pc = std::popcount(c);
              return pa != pc ? pa < pc : a < c;
            });
  search.blocks = static_cast<int>((search.elems.size() + 63) / 64);
  search.vertex_hits_blocks.assign(
      static_cast<std::size_t>(search.n) * search.blocks, 0);
  for (std::size_t i = 0; i < search.elems.size(); ++i)
    for (std::uint64_t m = search.elems[i]; m; m &= m - 1) {
      int v = std::countr_zero(m);
      search.vertex_hits_blocks[static_cast<std::size_t>(v) * search.blocks +
                                static_cast<int>(i / 64)] |=
          std::uint64_t{1} << (i % 64);
    }
  search.best = search.n + 1;
  std::vector<std::uint64_t> hit(search.blocks, 0);
  search.run(hit, 0, 0);
  return {search.best, HittingSet{VertexSet::from_mask(search.best_mask)}};
}

std::pair<Graph, Bramble> grid_bramble(int k) {
  if (k < 2) throw input_error("grid_bramble requires k >= 2");
  Graph g = grid(k, k);
  auto id = [k](int r, int c) { return r * k + c; };
  Bramble b;
  // Crosses of the top-left (k-1) x (k-1) subgrid: one of its rows plus one
  // of its columns.
  for (int i = 0; i < k - 1; ++i)
    for (int j = 0; j < k - 1; ++j) {
      std::vector<int> vs;
      for (int c = 0; c < k - 1; ++c) vs.push_back(id(i, c));
      for (int r = 0; r < k - 1; ++r) vs.push_back(id(r, j));
      b.elements.emplace_back(vs);
    }
  std::vector<int> bottom, right;
  for (int c = 0; c < k; ++c) bottom.push_back(id(k - 1, c));
  for (int r = 0; r < k - 1; ++r) right.push_back(id(r, k - 1));
  b.elements.emplace_back(bottom);
  b.elements.emplace_back(right);
  return {std::move(g), std::move(b)};
}

VertexSet hitting_bag(const Graph& g, const Bramble& b,
                      const TreeDecomposition& td) {
  auto bcheck = validate_bramble(g, b);
  if (!bcheck.ok) throw input_error("hitting_bag: " + bcheck.why);
  auto tcheck = validate_td(g, td);
  if (!tcheck.ok()) throw input_error("hitting_bag: " + tcheck.error);

  int t = td.node_count();
  std::vector<std::vector<int>> adj(t);
  for (auto [x, y] : td.tree_edges) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  // Nodes touched by each element. Elements are connected, so these node
  // sets are subtrees, and they pairwise intersect because elements touch.
  std::vector<std::vector<int>> holders(b.elements.size());
  for (std::size_t i = 0; i < b.elements.size(); ++i)
    for (int x = 0; x < t; ++x)
      if (td.bags[x].intersects(b.elements[i])) holders[i].push_back(x);

  std::vector<char> visited(t, 0);
  int x = 0;
  while (true) {
    if (visited[x]) throw internal_error("hitting_bag: walk revisited a node");
    visited[x] = 1;
    int missed = -1;
    for (std::size_t i = 0; i < b.elements.size(); ++i)
      if (!td.bags[x].intersects(b.elements[i])) {
        missed = static_cast<int>(i);
        break;
      }
    if (missed < 0) return td.bags[x];
    // Step toward the subtree of the missed element: find the neighbor of x
    // whose side of T - x contains it.
    int target = holders[missed].front();
    int step = -1;
    for (int y : adj[x]) {
      std::vector<char> seen(t, 0);
      seen[x] = 1;
      seen[y] = 1;
      std::vector<int> stack{y};
      bool found = y == target;
      while (!stack.empty() && !found) {
        int z = stack.back();
        stack.pop_back();
        for (int w : adj[z])
          if (!seen[w]) {
            seen[w] = 1;
            if (w == target) found = true;
            stack.push_back(w);
          }
      }
      if (found) {
        step = y;
        break;
      }
    }
    if (step < 0) throw internal_error("hitting_bag: no step toward element");
    x = step;
  }
}

std::optional<VertexSet> confining_component(const Graph& g, const Bramble& b,
                                             const VertexSet& x) {
  auto check = validate_bramble(g, b);
  if (!check.ok) throw input_error("confining_component: " + check.why);
  x.check_range(g.vertex_count(), "confining_component");

  std::optional<VertexSet> found;
  for (const auto& comp : components(g, x)) {
    bool confines = false;
    for (const auto& e : b.elements)
      if (e.subset_of(comp)) {
        confines = true;
        break;
      }
    if (!confines) continue;
    if (found)
      throw input_error(
          "confining_component: two components confine elements; "
          "the bramble cannot be valid");
    found = comp;
  }
  return found;
}

}  // namespace twtie
