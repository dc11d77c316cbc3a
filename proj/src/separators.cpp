#include "twtie/separators.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "omp_shim.hpp"
#include "twtie/errors.hpp"

namespace twtie {

namespace {

void check_fraction(const Rational& c) {
  if (c < Rational(1, 2) || c >= 1)
    throw input_error("separator fraction must lie in [1/2, 1)");
}

}  // namespace

Check is_separator(const Graph& g, const SeparatorCert& cert) {
  check_fraction(cert.c);
  cert.x.check_range(g.vertex_count(), "separator x");
  cert.s.check_range(g.vertex_count(), "separator s");

  // Components of g - x never meet x, so each component holds
  // |C ∩ s| = |C ∩ (s - x)| vertices; only the threshold differs between
  // the two variants.
  Rational threshold =
      cert.c * (cert.starred ? cert.s.size()
                             : cert.s.set_minus(cert.x).size());
  for (const auto& comp : components(g, cert.x)) {
    int load = comp.set_intersect(cert.s).size();
    if (load > threshold)
      return Check::fail("component " + comp.str() + " holds " +
                         std::to_string(load) + " > " +
                         rational_str(threshold) + " vertices of s");
  }
  return Check::pass();
}

namespace {

// Mask-based separator check used by the exhaustive oracle: works on the
// components of g - x and compares den*load <= num*threshold_count exactly.
struct MaskSep {
  int n;
  std::vector<std::uint64_t> adj;
  std::uint64_t full;
  std::int64_t num, den;
  bool starred;

  bool works(std::uint64_t x, std::uint64_t s) const {
    std::int64_t limit_count =
        starred ? std::popcount(s) : std::popcount(s & ~x);
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
      std::int64_t load = std::popcount(comp & s);
      if (den * load > num * limit_count) return false;
    }
    return true;
  }

  // Smallest |x| that works for s, searching sizes upward; x = V always
  // works, so this terminates at n.
  int min_x(std::uint64_t s) const {
    for (int size = 0; size <= n; ++size) {
      if (size == 0) {
        if (works(0, s)) return 0;
        continue;
      }
      // Gosper's hack: masks of fixed popcount in increasing order.
      std::uint64_t x = (std::uint64_t{1} << size) - 1;
      while (x < (std::uint64_t{1} << n)) {
        if (works(x, s)) return size;
        std::uint64_t c = x & (~x + 1), r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
      }
    }
    return n;
  }

  int min_x_with_pool(std::uint64_t s, std::vector<std::uint64_t>& pool,
                      int cap) const {
    for (std::uint64_t x : pool)
      if (std::popcount(x) <= cap && works(x, s)) return std::popcount(x);
    int k = min_x(s);
    // Remember a witness of that size for later sets.
    if (k > 0) {
      std::uint64_t x = (std::uint64_t{1} << k) - 1;
      while (x < (std::uint64_t{1} << n)) {
        if (works(x, s)) {
          pool.push_back(x);
          break;
        }
        std::uint64_t c = x & (~x + 1), r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
      }
    }
    return k;
  }
};

}  // namespace

SepNumberResult sep_number(const Graph& g, const Rational& c, bool starred,
                           int max_n, Exec exec) {
  check_fraction(c);
  int n = g.vertex_count();
  if (n > max_n)
    throw budget_error("sep_number: " + std::to_string(n) +
                       " vertices exceeds budget " + std::to_string(max_n));
  if (n > 24) throw budget_error("sep_number: n > 24");

  MaskSep sep{n,
              g.adjacency_masks(),
              n == 0 ? 0 : (std::uint64_t{1} << n) - 1,
              static_cast<std::int64_t>(numerator(c)),
              static_cast<std::int64_t>(denominator(c)),
              starred};

  // Pass 1: k = max over S of the minimum |X|. Each worker keeps a pool of
  // separators that succeeded before; a pooled hit of size <= its current
  // max proves S cannot raise the max, and on a miss the exact minimum is
  // recomputed, so the result is sweep-order independent.
  std::uint64_t total = std::uint64_t{1} << n;
  int threads = exec == Exec::Parallel ? omp_get_max_threads() : 1;
  std::vector<int> local_k(threads, 0);
#pragma omp parallel num_threads(threads)
  {
    int tid = omp_get_thread_num();
    std::uint64_t lo = total * tid / threads;
    std::uint64_t hi = total * (tid + 1) / threads;
    std::vector<std::uint64_t> pool;
    int k = 0;
    for (std::uint64_t s = lo; s < hi; ++s)
      k = std::max(k, sep.min_x_with_pool(s, pool, k));
    local_k[tid] = k;
  }
  int k = *std::max_element(local_k.begin(), local_k.end());

  // Pass 2: lexicographically least S that truly needs k vertices, i.e. the
  // first S with no working X of size < k.
  SepNumberResult res;
  res.k = k;
  std::vector<std::uint64_t> pool;
  for (std::uint64_t s = 0; s < total; ++s) {
    bool below = false;
    for (std::uint64_t x : pool)
      if (std::popcount(x) < k && sep.works(x, s)) {
        below = true;
        break;
      }
    if (!below) {
      int m = sep.min_x(s);
      if (m >= k) {
        res.worst_s = VertexSet::from_mask(s);
        return res;
      }
      std::uint64_t x = (std::uint64_t{1} << m) - 1;
      if (m == 0) {
        pool.push_back(0);
      } else {
        while (x < (std::uint64_t{1} << n)) {
          if (sep.works(x, s)) {
            pool.push_back(x);
            break;
          }
          std::uint64_t cc = x & (~x + 1), r = x + cc;
          x = (((r ^ x) >> 2) / cc) | r;
        }
      }
    }
  }
  throw internal_error("sep_number: no witness set found for the maximum");
}

VertexSet separator_from_td(const Graph& g, const VertexSet& s,
                            const TreeDecomposition& td_in) {
  auto valid = validate_td(g, td_in);
  if (!valid.ok())
    throw input_error("separator_from_td: invalid decomposition: " +
                      valid.error);
  s.check_range(g.vertex_count(), "separator_from_td");

  TreeDecomposition td =
      is_normalized(td_in) ? td_in : normalize_td(g, td_in);
  int t = td.node_count();
  std::vector<std::vector<int>> adj(t);
  for (auto [x, y] : td.tree_edges) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }

  auto half_sep = [&](const VertexSet& x) {
    return is_separator(g, {x, s, Rational(1, 2), false});
  };

  if (td.tree_edges.empty()) {
    // A single bag holds every vertex; removing it leaves nothing.
    VertexSet bag = td.bags[0];
    if (!half_sep(bag))
      throw internal_error("separator_from_td: single-bag case failed");
    return bag;
  }

  // Node sets on each side of every tree edge, and from them the vertices
  // appearing only on one side.
  int n = g.vertex_count();
  std::vector<std::vector<int>> holders(n);
  for (int x = 0; x < t; ++x)
    for (int v : td.bags[x]) holders[v].push_back(x);

  std::vector<int> toward(td.tree_edges.size(), -1);
  for (std::size_t e = 0; e < td.tree_edges.size(); ++e) {
    auto [a, b] = td.tree_edges[e];
    std::vector<char> on_a_side(t, 0);
    {
      std::vector<int> stack{a};
      on_a_side[a] = 1;
      while (!stack.empty()) {
        int z = stack.back();
        stack.pop_back();
        for (int w : adj[z]) {
          if ((z == a && w == b) || (z == b && w == a)) continue;
          if (!on_a_side[w] && w != b) {
            on_a_side[w] = 1;
            stack.push_back(w);
          }
        }
      }
    }
    int ua_s = 0, ub_s = 0;
    for (int v : s) {
      bool in_a = false, in_b = false;
      for (int x : holders[v]) (on_a_side[x] ? in_a : in_b) = true;
      if (in_a && !in_b) ++ua_s;
      if (in_b && !in_a) ++ub_s;
    }
    VertexSet z = td.bags[a].set_intersect(td.bags[b]);
    int w_count = s.set_minus(z).size();
    bool large_a = 2 * ua_s > w_count;
    bool large_b = 2 * ub_s > w_count;
    if (!large_a && !large_b) {
      if (!half_sep(z))
        throw internal_error("separator_from_td: intersection bag failed");
      return z;
    }
    if (large_a && large_b)
      throw internal_error("separator_from_td: both sides large");
    toward[e] = large_a ? a : b;
  }

  // Every edge points toward its large side; follow the arrows to the sink.
  int cur = 0;
  while (true) {
    int next = -1;
    for (std::size_t e = 0; e < td.tree_edges.size(); ++e) {
      auto [a, b] = td.tree_edges[e];
      if (a == cur && toward[e] == b) next = b;
      if (b == cur && toward[e] == a) next = a;
      if (next >= 0) break;
    }
    if (next < 0) break;
    cur = next;
  }
  VertexSet bag = td.bags[cur];
  if (!half_sep(bag))
    throw internal_error(
        "separator_from_td: sink bag is not a separator, which contradicts "
        "the integrality argument");
  return bag;
}

std::vector<std::vector<VertexSet>> partition_components(const Graph& g,
                                                         const VertexSet& x,
                                                         const VertexSet& s,
                                                         int max_parts) {
  if (max_parts != 2 && max_parts != 3)
    throw input_error("partition_components: max_parts must be 2 or 3");
  x.check_range(g.vertex_count(), "partition_components");
  s.check_range(g.vertex_count(), "partition_components");

  auto comps = components(g, x);
  VertexSet sx = s.set_minus(x);
  int total = sx.size();
  // Caps: weight <= 1/2 of s-x for three parts, <= 2/3 for two.
  auto fits = [&](long long weight) {
    return max_parts == 3 ? 2 * weight <= total : 3 * weight <= 2 * total;
  };
  std::vector<int> weight(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    weight[i] = comps[i].set_intersect(sx).size();
    if (!fits(weight[i]))
      throw input_error("partition_components: component " + comps[i].str() +
                        " alone exceeds the bound");
  }

  // First-fit decreasing. With item weights under the cap and total exactly
  // |s-x|, three bins suffice at cap 1/2 and two at cap 2/3.
  std::vector<std::size_t> idx(comps.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return weight[a] != weight[b] ? weight[a] > weight[b] : a < b;
  });
  std::vector<std::vector<VertexSet>> parts;
  std::vector<long long> load;
  for (std::size_t i : idx) {
    bool placed = false;
    for (std::size_t p = 0; p < parts.size() && !placed; ++p)
      if (fits(load[p] + weight[i])) {
        parts[p].push_back(comps[i]);
        load[p] += weight[i];
        placed = true;
      }
    if (!placed) {
      parts.push_back({comps[i]});
      load.push_back(weight[i]);
    }
  }
  if (static_cast<int>(parts.size()) > max_parts)
    throw internal_error("partition_components: merge bound violated");
  return parts;
}

}  // namespace twtie
