#include "twtie/branchwidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "twtie/errors.hpp"

namespace twtie {

namespace {

struct Builder {
  const std::vector<std::uint32_t>& split;
  BranchDecomposition bd;

  // Returns the root node of the subtree realizing edge set s.
  int build(std::uint32_t s) {
    if (std::popcount(s) == 1) {
      int leaf = bd.nodes++;
      bd.leaf_of[std::countr_zero(s)] = leaf;
      return leaf;
    }
    int c = bd.nodes++;
    int left = build(split[s]);
    int right = build(s & ~split[s]);
    bd.tree_edges.push_back({std::min(c, left), std::max(c, left)});
    bd.tree_edges.push_back({std::min(c, right), std::max(c, right)});
    return c;
  }
};

}  // namespace

BranchwidthResult exact_branchwidth(const Graph& g, int max_edges) {
  int m = g.edge_count();
  if (m <= 1) return {0, std::nullopt};
  if (m > max_edges)
    throw budget_error("exact_branchwidth: " + std::to_string(m) +
                       " edges exceeds budget " + std::to_string(max_edges));
  if (m > 18)
    throw budget_error("exact_branchwidth: split table for m > 18 edges");

  int n = g.vertex_count();
  std::vector<std::uint32_t> vertex_edges(n, 0);  // incident edge masks
  for (int e = 0; e < m; ++e) {
    auto [u, v] = g.edges()[e];
    vertex_edges[u] |= std::uint32_t{1} << e;
    vertex_edges[v] |= std::uint32_t{1} << e;
  }
  std::uint32_t full = (std::uint32_t{1} << m) - 1;
  auto boundary = [&](std::uint32_t s) {
    int b = 0;
    for (int v = 0; v < n; ++v)
      b += (vertex_edges[v] & s) != 0 && (vertex_edges[v] & ~s & full) != 0;
    return b;
  };

  // f[S] = best width of a subtree carrying the edges of S, including the
  // order of the tree edge above S. Splits are enumerated once by fixing
  // the lowest edge of S on the left side.
  std::vector<std::int8_t> f(std::size_t{1} << m, 0);
  std::vector<std::uint32_t> split(std::size_t{1} << m, 0);
  for (std::uint32_t s = 1; s <= full; ++s) {
    int b = boundary(s);
    if (std::popcount(s) == 1) {
      f[s] = static_cast<std::int8_t>(b);
      continue;
    }
    std::uint32_t low = s & (~s + 1);
    int bestv = 127;
    std::uint32_t bests = 0;
    for (std::uint32_t sub = (s - 1) & s; sub; sub = (sub - 1) & s) {
      if (!(sub & low)) continue;
      int v = std::max<int>(f[sub], f[s & ~sub]);
      if (v < bestv) {
        bestv = v;
        bests = sub;
      }
    }
    f[s] = static_cast<std::int8_t>(std::max(b, bestv));
    split[s] = bests;
  }

  Builder builder{split, {}};
  builder.bd.leaf_of.assign(m, -1);
  int r1 = builder.build(split[full]);
  int r2 = builder.build(full & ~split[full]);
  builder.bd.tree_edges.push_back({std::min(r1, r2), std::max(r1, r2)});
  return {f[full], std::move(builder.bd)};
}

}  // namespace twtie
