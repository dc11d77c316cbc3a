#include "twtie/linkage.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "omp_shim.hpp"
#include "twtie/errors.hpp"
#include "twtie/paths.hpp"

namespace twtie {

namespace {

double subset_count(int n, int max_size) {
  double total = 0, c = 1;
  for (int i = 0; i <= max_size; ++i) {
    total += c;
    c = c * (n - i) / (i + 1);
  }
  return total;
}

// Shared mask machinery for the component sweeps.
struct MaskComponents {
  std::vector<std::uint64_t> adj;
  std::uint64_t full;

  explicit MaskComponents(const Graph& g)
      : adj(g.adjacency_masks()),
        full(g.vertex_count() == 0
                 ? 0
                 : (~std::uint64_t{0} >>
                    (64 - g.vertex_count()))) {}

  // True iff some component of g - x holds more than half of s.
  bool has_big_component(std::uint64_t x, std::uint64_t s) const {
    int total = std::popcount(s);
    std::uint64_t rest = full & ~x;
    while (rest) {
      std::uint64_t comp = rest & (~rest + 1);
      std::uint64_t frontier = comp;
      while (frontier) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        std::uint64_t fresh = adj[v] & rest & ~comp;
        comp |= fresh;
        frontier |= fresh;
      }
      rest &= ~comp;
      if (2 * std::popcount(comp & s) > total) return true;
    }
    return false;
  }
};

}  // namespace

Check is_k_linked(const Graph& g, const VertexSet& s, int k) {
  if (k < 1) throw input_error("is_k_linked requires k >= 1");
  int n = g.vertex_count();
  s.check_range(n, "is_k_linked");
  if (n > 64 || subset_count(n, k - 1) > double(1 << 24))
    throw budget_error("is_k_linked: X enumeration too large");

  MaskComponents mc(g);
  std::uint64_t smask = s.mask();
  // All X with |X| < k, by increasing size.
  std::optional<VertexSet> witness;
  std::vector<int> cur;
  std::uint64_t curmask = 0;
  auto rec = [&](auto&& self, int start, int remaining) -> bool {
    if (!mc.has_big_component(curmask, smask)) {
      witness = VertexSet(cur);
      return false;
    }
    if (remaining == 0) return true;
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      curmask |= std::uint64_t{1} << v;
      bool ok = self(self, v + 1, remaining - 1);
      curmask &= ~(std::uint64_t{1} << v);
      cur.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  if (!rec(rec, 0, k - 1))
    return Check::fail("X = " + witness->str() +
                       " leaves no component with more than half of s");
  return Check::pass();
}

namespace {

// Minimum |X| such that no component of g - X holds more than half of s.
// Bounded by ceil(|s|/2), since deleting that many vertices of s works.
int kill_cost(const MaskComponents& mc, int n, std::uint64_t smask) {
  int cap = (std::popcount(smask) + 1) / 2;
  for (int size = 0; size <= cap; ++size) {
    if (size == 0) {
      if (!mc.has_big_component(0, smask)) return 0;
      continue;
    }
    std::uint64_t x = (std::uint64_t{1} << size) - 1;
    while (x < (std::uint64_t{1} << n)) {
      if (!mc.has_big_component(x, smask)) return size;
      std::uint64_t c = x & (~x + 1), r = x + c;
      x = (((r ^ x) >> 2) / c) | r;
    }
  }
  return cap;
}

}  // namespace

LinkednessResult linkedness(const Graph& g, int max_n, Exec exec) {
  int n = g.vertex_count();
  if (n == 0) throw input_error("linkedness of the empty graph is undefined");
  if (n > max_n)
    throw budget_error("linkedness: " + std::to_string(n) +
                       " vertices exceeds budget " + std::to_string(max_n));

  MaskComponents mc(g);
  std::uint64_t total = std::uint64_t{1} << n;
  int threads = exec == Exec::Parallel ? omp_get_max_threads() : 1;
  std::vector<LinkednessResult> local(threads);
#pragma omp parallel num_threads(threads)
  {
    int tid = omp_get_thread_num();
    std::uint64_t lo = 1 + (total - 1) * tid / threads;
    std::uint64_t hi = 1 + (total - 1) * (tid + 1) / threads;
    LinkednessResult best;
    for (std::uint64_t s = lo; s < hi; ++s) {
      // s is k-linked exactly for k <= kill_cost, so the largest k-linked
      // set maximizes that cost.
      int k = kill_cost(mc, n, s);
      VertexSet set = VertexSet::from_mask(s);
      if (k > best.k || (k == best.k && set < best.witness))
        best = {k, std::move(set)};
    }
    local[tid] = std::move(best);
  }
  LinkednessResult best;
  for (auto& cand : local)
    if (cand.k > best.k || (cand.k == best.k && !cand.witness.empty() &&
                            (best.witness.empty() || cand.witness < best.witness)))
      best = std::move(cand);
  return best;
}

namespace {

// Enumerates unordered disjoint equal-size pairs (A, B) of subsets of s and
// applies fn; stops early when fn returns false. fn(A, B, rest) receives the
// members of s outside the pair.
template <class F>
bool for_disjoint_pairs(const VertexSet& s, int max_pair_size, F&& fn) {
  int q = s.size();
  const auto& sv = s.vertices();
  for (std::uint64_t am = 1; am < (std::uint64_t{1} << q); ++am) {
    int asz = std::popcount(am);
    if (asz > max_pair_size) continue;
    std::uint64_t restm = ((std::uint64_t{1} << q) - 1) & ~am;
    // Subsets of the complement with the same size.
    for (std::uint64_t bm = restm; bm; bm = (bm - 1) & restm) {
      if (std::popcount(bm) != asz || bm < am) continue;
      std::vector<int> a, b, rest;
      for (int i = 0; i < q; ++i) {
        if (am >> i & 1)
          a.push_back(sv[i]);
        else if (bm >> i & 1)
          b.push_back(sv[i]);
        else
          rest.push_back(sv[i]);
      }
      if (!fn(VertexSet(a), VertexSet(b), VertexSet(rest))) return false;
    }
  }
  return true;
}

}  // namespace

Check is_well_linked(const Graph& g, const VertexSet& s, bool external) {
  int n = g.vertex_count();
  s.check_range(n, "is_well_linked");
  if (s.size() > 15)
    throw budget_error("is_well_linked: pair enumeration too large");

  Check result = Check::pass();
  for_disjoint_pairs(
      s, s.size(), [&](VertexSet a, VertexSet b, VertexSet rest) {
        // External: paths avoid s internally. Internal: the binding variant
        // of the pair (A ∪ C, B ∪ C) needs paths from A to B avoiding
        // C = s - (A ∪ B); endpoints never lie in C, so the internal-only
        // restriction bars C from the paths entirely.
        const VertexSet& forbidden = external ? s : rest;
        auto fam = disjoint_paths(g, a, b, forbidden);
        if (fam.count < a.size()) {
          result = Check::fail("A = " + a.str() + ", B = " + b.str() +
                               ": only " + std::to_string(fam.count) +
                               " disjoint paths");
          return false;
        }
        return true;
      });
  return result;
}

WellLinkedResult well_linked_number(const Graph& g, int max_n, Exec exec) {
  int n = g.vertex_count();
  if (n == 0)
    throw input_error("well_linked_number of the empty graph is undefined");
  if (n > max_n)
    throw budget_error("well_linked_number: " + std::to_string(n) +
                       " vertices exceeds budget " + std::to_string(max_n));

  int threads = exec == Exec::Parallel ? omp_get_max_threads() : 1;
  for (int size = n; size >= 1; --size) {
    // Collect the level; scan it in parallel and keep the least witness.
    std::vector<std::uint64_t> level;
    std::uint64_t m = (std::uint64_t{1} << size) - 1;
    while (m < (std::uint64_t{1} << n)) {
      level.push_back(m);
      std::uint64_t c = m & (~m + 1), r = m + c;
      m = (((r ^ m) >> 2) / c) | r;
    }
    std::vector<std::optional<VertexSet>> local(threads);
#pragma omp parallel num_threads(threads)
    {
      int tid = omp_get_thread_num();
      std::optional<VertexSet> best;
#pragma omp for schedule(dynamic)
      for (long long i = 0; i < static_cast<long long>(level.size()); ++i) {
        VertexSet s = VertexSet::from_mask(level[i]);
        if (is_well_linked(g, s, false).ok)
          if (!best || s < *best) best = std::move(s);
      }
      local[tid] = std::move(best);
    }
    std::optional<VertexSet> best;
    for (auto& cand : local)
      if (cand && (!best || *cand < *best)) best = std::move(cand);
    if (best) return {size, *best};
  }
  throw internal_error("well_linked_number: no singleton passed");
}

Check is_k_connected_set(const Graph& g, const VertexSet& s, int k,
                         bool external) {
  if (k < 1) throw input_error("is_k_connected_set requires k >= 1");
  int n = g.vertex_count();
  s.check_range(n, "is_k_connected_set");
  if (s.size() > 13)
    throw budget_error("is_k_connected_set: enumeration too large");
  if (s.size() < k)
    return Check::fail("|s| = " + std::to_string(s.size()) + " < k = " +
                       std::to_string(k));

  Check result = Check::pass();
  for_disjoint_pairs(s, k, [&](VertexSet a, VertexSet b, VertexSet rest) {
    if (external) {
      auto fam = disjoint_paths_avoiding_edges(g, a, b, s, s);
      if (fam.count < a.size()) {
        result = Check::fail("A = " + a.str() + ", B = " + b.str() +
                             ": only " + std::to_string(fam.count) +
                             " paths avoiding s and its edges");
        return false;
      }
      return true;
    }
    // Internal variant: a pair (A ∪ C, B ∪ C) with |A ∪ C| <= k reduces to
    // A-B paths avoiding C. Avoiding a superset is harder, so the largest
    // admissible C values cover the rest.
    int csize = std::min(k - a.size(), rest.size());
    const auto& rv = rest.vertices();
    std::vector<int> pick;
    auto rec = [&](auto&& self, int start, int remaining) -> bool {
      if (remaining == 0) {
        auto fam = disjoint_paths(g, a, b, VertexSet(pick));
        if (fam.count < a.size()) {
          result = Check::fail("A = " + a.str() + ", B = " + b.str() +
                               ", avoiding C = " + VertexSet(pick).str() +
                               ": only " + std::to_string(fam.count) +
                               " disjoint paths");
          return false;
        }
        return true;
      }
      for (int i = start;
           i <= static_cast<int>(rv.size()) - remaining; ++i) {
        pick.push_back(rv[i]);
        bool ok = self(self, i + 1, remaining - 1);
        pick.pop_back();
        if (!ok) return false;
      }
      return true;
    };
    return rec(rec, 0, csize);
  });
  return result;
}

}  // namespace twtie
