#include "twtie/tangle.hpp"

#include <set>

#include "twtie/errors.hpp"

namespace twtie {

Check validate_tangle(const Graph& g, const Tangle& t) {
  int n = g.vertex_count();
  for (std::size_t i = 0; i < t.elements.size(); ++i) {
    t.elements[i].check_range(n, "tangle element");
    if (!is_connected_subset(g, t.elements[i]))
      return Check::fail("element " + std::to_string(i) +
                         " is empty or not connected");
  }
  std::size_t m = t.elements.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      VertexSet ij = t.elements[i].set_intersect(t.elements[j]);
      for (std::size_t l = j; l < m; ++l) {
        if (ij.intersects(t.elements[l])) continue;
        bool edge_ok = false;
        for (auto [u, v] : g.edges()) {
          auto meets = [&](const VertexSet& s) {
            return s.contains(u) || s.contains(v);
          };
          if (meets(t.elements[i]) && meets(t.elements[j]) &&
              meets(t.elements[l])) {
            edge_ok = true;
            break;
          }
        }
        if (!edge_ok)
          return Check::fail("triple (" + std::to_string(i) + ", " +
                             std::to_string(j) + ", " + std::to_string(l) +
                             ") has no common vertex and no meeting edge");
      }
    }
  return Check::pass();
}

Tangle tangle_from_bramble(const Graph& g, const Bramble& b, int k) {
  if (k <= 1)
    throw input_error(
        "tangle_from_bramble: k <= 1 would give an empty family");
  auto [order, hs] = bramble_order(g, b);  // also validates b
  if (order < k)
    throw input_error("tangle_from_bramble: bramble order " +
                      std::to_string(order) + " is below k = " +
                      std::to_string(k));

  int n = g.vertex_count();
  int max_size = (k - 1) / 2;  // |X| < k/2
  double subsets = 1;
  for (int i = 1; i <= max_size; ++i) subsets *= n;
  if (subsets > double(1) * (1 << 24))
    throw budget_error("tangle_from_bramble: subset enumeration too large");

  // Every X below half the order misses some element, which then sits in
  // exactly one component of g - X; collect these confining components.
  std::set<VertexSet> seen;
  std::vector<int> cur;
  auto visit = [&](const std::vector<int>& xs) {
    auto comp = confining_component(g, b, VertexSet(xs));
    if (!comp)
      throw internal_error("tangle_from_bramble: a small X hit the bramble");
    seen.insert(*comp);
  };
  visit({});
  auto rec = [&](auto&& self, int start, int remaining) -> void {
    if (remaining == 0) return;
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      visit(cur);
      self(self, v + 1, remaining - 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, max_size);

  Tangle out;
  out.elements.assign(seen.begin(), seen.end());
  return out;
}

}  // namespace twtie
