#include "twtie/minors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "twtie/errors.hpp"
#include "twtie/exact_lp.hpp"
#include "twtie/families.hpp"

namespace twtie {

namespace {

struct KtSearch {
  int n, t;
  std::vector<std::uint64_t> adj;
  std::vector<std::uint64_t> branches;
  std::vector<std::uint64_t>* found;

  std::uint64_t neighborhood(std::uint64_t s) const {
    std::uint64_t nb = 0;
    for (std::uint64_t m = s; m; m &= m - 1) nb |= adj[std::countr_zero(m)];
    return nb & ~s;
  }

  bool adjacent_to_all(std::uint64_t s) const {
    std::uint64_t closed = s | neighborhood(s);
    for (std::uint64_t br : branches)
      if (!(closed & br)) return false;
    return true;
  }

  // Connected supersets of cur inside `allowed`, each enumerated once:
  // extensions are taken in ascending order and everything skipped earlier
  // on this path stays banned.
  bool grow(std::uint64_t cur, std::uint64_t allowed, std::uint64_t banned) {
    if (adjacent_to_all(cur)) {
      branches.push_back(cur);
      if (next_branch(allowed & ~cur)) return true;
      branches.pop_back();
    }
    std::uint64_t ext = neighborhood(cur) & allowed & ~banned;
    while (ext) {
      std::uint64_t bit = ext & (~ext + 1);
      ext &= ext - 1;
      if (grow(cur | bit, allowed, banned)) return true;
      banned |= bit;
    }
    return false;
  }

  bool next_branch(std::uint64_t avail) {
    if (static_cast<int>(branches.size()) == t) {
      *found = branches;
      return true;
    }
    if (static_cast<int>(branches.size()) + std::popcount(avail) < t)
      return false;
    // The new branch's minimum vertex moves strictly upward, killing
    // permutations of the same branch list.
    std::uint64_t mins = avail;
    while (mins) {
      std::uint64_t bit = mins & (~mins + 1);
      mins &= mins - 1;
      std::uint64_t allowed = avail & ~(bit - 1);
      if (static_cast<int>(branches.size()) + std::popcount(allowed) < t)
        break;
      if (grow(bit, allowed, 0)) return true;
    }
    return false;
  }
};

int clique_number(const std::vector<std::uint64_t>& adj, int n) {
  int best = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> stack{
      {0, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1}};
  while (!stack.empty()) {
    auto [cur, cand] = stack.back();
    stack.pop_back();
    if (std::popcount(cur) > best) best = std::popcount(cur);
    while (cand) {
      if (std::popcount(cur) + std::popcount(cand) <= best) break;
      std::uint64_t bit = cand & (~cand + 1);
      cand &= cand - 1;
      stack.push_back({cur | bit, cand & adj[std::countr_zero(bit)]});
    }
  }
  return best;
}

}  // namespace

HadwigerResult hadwiger_number(const Graph& g, int max_n) {
  int n = g.vertex_count();
  if (n == 0) throw input_error("hadwiger_number of the empty graph");
  if (n > max_n)
    throw budget_error("hadwiger_number: " + std::to_string(n) +
                       " vertices exceeds budget " + std::to_string(max_n));

  auto adj = g.adjacency_masks();
  std::uint64_t full =
      n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

  // A clique is a model with singleton branches, so start there and push up.
  int best = clique_number(adj, n);
  std::vector<std::uint64_t> best_branches;
  {
    // Recover a lexicographically least maximum clique as the witness.
    KtSearch search{n, best, adj, {}, &best_branches};
    if (!search.next_branch(full))
      throw internal_error("hadwiger_number: clique witness vanished");
  }
  while (best < n) {
    std::vector<std::uint64_t> cand;
    KtSearch search{n, best + 1, adj, {}, &cand};
    if (!search.next_branch(full)) break;
    best_branches = cand;
    ++best;
  }

  HadwigerResult res;
  res.t = best;
  res.model.host = g;
  res.model.pattern = complete(best);
  for (auto m : best_branches) res.model.branches.push_back(VertexSet::from_mask(m));
  return res;
}

namespace {

Check induces_path(const Graph& g, const VertexSet& p) {
  if (p.empty()) return Check::fail("empty path");
  if (!is_connected_subset(g, p)) return Check::fail("not connected");
  int inner_edges = 0;
  for (int v : p) {
    int d = 0;
    for (int w : g.neighbors(v)) d += p.contains(w);
    if (d > 2) return Check::fail("vertex " + std::to_string(v) +
                                  " has degree " + std::to_string(d) +
                                  " inside the set");
    inner_edges += d;
  }
  if (inner_edges != 2 * (p.size() - 1))
    return Check::fail("induced subgraph has a cycle");
  return Check::pass();
}

Graph intersection_graph(const std::vector<VertexSet>& paths) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (std::size_t j = i + 1; j < paths.size(); ++j)
      if (paths[i].intersects(paths[j]))
        edges.push_back({static_cast<int>(i), static_cast<int>(j)});
  return Graph(static_cast<int>(paths.size()), std::move(edges));
}

}  // namespace

Result<int> validate_glm(const Graph& g, const GridLikeMinorCert& cert) {
  using R = Result<int>;
  if (cert.paths.empty()) return R::failure("no paths");
  if (cert.side.size() != cert.paths.size())
    return R::failure("side labels do not match the path list");
  for (std::size_t i = 0; i < cert.paths.size(); ++i) {
    cert.paths[i].check_range(g.vertex_count(), "glm path");
    auto pc = induces_path(g, cert.paths[i]);
    if (!pc.ok)
      return R::failure("path " + std::to_string(i) + ": " + pc.why);
    if (cert.side[i] != 0 && cert.side[i] != 1)
      return R::failure("path " + std::to_string(i) + " has a bad side");
  }
  Graph h = intersection_graph(cert.paths);
  for (auto [i, j] : h.edges())
    if (cert.side[i] == cert.side[j])
      return R::failure("paths " + std::to_string(i) + " and " +
                        std::to_string(j) +
                        " share a vertex but sit on the same side");
  int t = static_cast<int>(cert.kt_branches.size());
  if (t < 1) return R::failure("empty complete-minor model");
  Model m{h, complete(t), cert.kt_branches};
  auto mc = validate_model(m);
  if (!mc.ok) return R::failure("intersection-graph model: " + mc.why);
  return R::success(t);
}

std::pair<Graph, GridLikeMinorCert> glm_from_grid(int k) {
  if (k < 2) throw input_error("glm_from_grid requires k >= 2");
  Graph g = grid(k, k);
  GridLikeMinorCert cert;
  for (int r = 0; r < k; ++r) {
    std::vector<int> row;
    for (int c = 0; c < k; ++c) row.push_back(r * k + c);
    cert.paths.emplace_back(row);
    cert.side.push_back(0);
  }
  for (int c = 0; c < k; ++c) {
    std::vector<int> col;
    for (int r = 0; r < k; ++r) col.push_back(r * k + c);
    cert.paths.emplace_back(col);
    cert.side.push_back(1);
  }
  // K_{k+1} in K_{k,k}: row i with column i for i < k-1, and the last row
  // and last column as singleton branches.
  for (int i = 0; i < k - 1; ++i)
    cert.kt_branches.push_back(VertexSet{i, k + i});
  cert.kt_branches.push_back(VertexSet{k - 1});
  cert.kt_branches.push_back(VertexSet{2 * k - 1});
  return {std::move(g), std::move(cert)};
}

Model model_in_product_from_glm(const Graph& g,
                                const GridLikeMinorCert& cert) {
  auto valid = validate_glm(g, cert);
  if (!valid.ok())
    throw input_error("model_in_product_from_glm: " + valid.error);
  int n = g.vertex_count();
  Model m;
  m.host = cartesian_with_k2(g);
  m.pattern = complete(*valid);
  for (const auto& branch : cert.kt_branches) {
    VertexSet lifted;
    for (int pi : branch)
      for (int v : cert.paths[pi])
        lifted.insert(v + cert.side[pi] * n);
    m.branches.push_back(std::move(lifted));
  }
  return m;
}

Rational WeightedBramble::total() const {
  return std::accumulate(weights.begin(), weights.end(), Rational(0));
}

Check WeightedBramble::check_load(const Graph& g) const {
  if (weights.size() != bramble.elements.size())
    return Check::fail("weight list does not match the element list");
  for (const auto& w : weights)
    if (w < 0) return Check::fail("negative weight");
  for (int v = 0; v < g.vertex_count(); ++v) {
    Rational load(0);
    for (std::size_t i = 0; i < bramble.elements.size(); ++i)
      if (bramble.elements[i].contains(v)) load += weights[i];
    if (load > 1)
      return Check::fail("vertex " + std::to_string(v) + " carries load " +
                         rational_str(load));
  }
  return Check::pass();
}

Check WeightedBramble::check_r_integral(int r) const {
  for (const auto& w : weights)
    if (denominator(Rational(w * r)) != 1)
      return Check::fail("weight " + rational_str(w) +
                         " is not a multiple of 1/" + std::to_string(r));
  return Check::pass();
}

WeightedBramble weighted_bramble_from_product_model(const Graph& g,
                                                    const Model& m, int r) {
  if (r < 2) throw input_error("weighted bramble projection requires r >= 2");
  if (!(m.host == cartesian_with_k2(g)))
    throw input_error("model host is not the product of g with K_2");
  int t = m.pattern.vertex_count();
  if (!(m.pattern == complete(t)))
    throw input_error("model pattern is not a complete graph");
  auto mc = validate_model(m);
  if (!mc.ok) throw input_error("invalid product model: " + mc.why);

  int n = g.vertex_count();
  WeightedBramble wb;
  for (const auto& branch : m.branches) {
    VertexSet proj;
    for (int x : branch) proj.insert(x < n ? x : x - n);
    wb.bramble.elements.push_back(std::move(proj));
    wb.weights.emplace_back(r / 2, r);
  }
  return wb;
}

Rational fractional_order(const Graph& g, const Bramble& b) {
  auto check = validate_bramble(g, b);
  if (!check.ok) throw input_error("fractional_order: " + check.why);
  std::size_t m = b.elements.size();
  std::vector<Rational> c(m, Rational(1));
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<Rational> row(m, Rational(0));
    bool any = false;
    for (std::size_t i = 0; i < m; ++i)
      if (b.elements[i].contains(v)) {
        row[i] = 1;
        any = true;
      }
    if (any) {
      rows.push_back(std::move(row));
      rhs.emplace_back(1);
    }
  }
  return simplex_max(c, rows, rhs).optimum;
}

namespace {

// Exact optimum of max sum z_e / r subject to per-vertex load sums <= r,
// z integral. Elements ordered small-first; remaining capacity bounds the
// achievable total, pruning the search.
int r_integral_best(const std::vector<std::uint64_t>& elems, int n, int r) {
  std::vector<int> residual(n, r);
  int best = 0;
  auto total_residual = [&] {
    int s = 0;
    for (int v = 0; v < n; ++v) s += residual[v];
    return s;
  };
  auto rec = [&](auto&& self, std::size_t idx, int cur) -> void {
    if (cur > best) best = cur;
    if (idx == elems.size()) return;
    if (cur + total_residual() <= best) return;
    int cap = r;
    for (std::uint64_t m = elems[idx]; m; m &= m - 1)
      cap = std::min(cap, residual[std::countr_zero(m)]);
    for (int z = cap; z >= 0; --z) {
      for (std::uint64_t m = elems[idx]; m; m &= m - 1)
        residual[std::countr_zero(m)] -= z;
      self(self, idx + 1, cur + z);
      for (std::uint64_t m = elems[idx]; m; m &= m - 1)
        residual[std::countr_zero(m)] += z;
    }
  };
  rec(rec, 0, 0);
  return best;
}

}  // namespace

Rational had_f_small(const Graph& g, std::optional<int> r, int max_n) {
  int n = g.vertex_count();
  if (n == 0) throw input_error("had_f_small of the empty graph");
  if (n > max_n)
    throw budget_error("had_f_small: " + std::to_string(n) +
                       " vertices exceeds budget " + std::to_string(max_n));
  if (r && *r < 2) throw input_error("had_f_small: r must be >= 2");

  auto adj = g.adjacency_masks();
  std::uint64_t full =
      n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

  // All connected vertex sets, plus their closed neighborhoods for the
  // touch test.
  std::vector<std::uint64_t> sets, closed;
  for (std::uint64_t s = 1; s <= full; ++s) {
    std::uint64_t comp = s & (~s + 1), frontier = comp;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      std::uint64_t fresh = adj[v] & s & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    if (comp != s) continue;
    sets.push_back(s);
    std::uint64_t nb = s;
    for (std::uint64_t m = s; m; m &= m - 1) nb |= adj[std::countr_zero(m)];
    closed.push_back(nb);
  }
  std::size_t cnt = sets.size();
  if (cnt > 63) throw budget_error("had_f_small: too many connected sets");

  // Touch graph over the connected sets; its maximal cliques are the
  // maximal brambles, and enlarging a bramble never shrinks the optimum.
  std::vector<std::uint64_t> touch(cnt, 0);
  for (std::size_t i = 0; i < cnt; ++i)
    for (std::size_t j = i + 1; j < cnt; ++j)
      if (closed[i] & sets[j]) {
        touch[i] |= std::uint64_t{1} << j;
        touch[j] |= std::uint64_t{1} << i;
      }

  Rational best(0);
  auto evaluate = [&](std::uint64_t family) {
    std::vector<std::uint64_t> elems;
    for (std::uint64_t m = family; m; m &= m - 1)
      elems.push_back(sets[std::countr_zero(m)]);
    std::sort(elems.begin(), elems.end(),
              [](std::uint64_t a, std::uint64_t b) {
                int pa = std::popcount(a), pb = std::popcount(b);
                return pa != pb ? pa < pb : a < b;
              });
    if (r) {
      int z = r_integral_best(elems, n, *r);
      Rational val(z, *r);
      if (val > best) best = val;
    } else {
      Bramble b;
      for (auto e : elems) b.elements.push_back(VertexSet::from_mask(e));
      Rational val = fractional_order(g, b);
      if (val > best) best = val;
    }
  };

  // Bron-Kerbosch with pivoting.
  auto bk = [&](auto&& self, std::uint64_t rset, std::uint64_t p,
                std::uint64_t x) -> void {
    if (!p && !x) {
      if (rset) evaluate(rset);
      return;
    }
    std::uint64_t px = p | x;
    int pivot = std::countr_zero(px);
    int best_deg = -1;
    for (std::uint64_t m = px; m; m &= m - 1) {
      int u = std::countr_zero(m);
      int d = std::popcount(touch[u] & p);
      if (d > best_deg) {
        best_deg = d;
        pivot = u;
      }
    }
    std::uint64_t cand = p & ~touch[pivot];
    while (cand) {
      std::uint64_t bit = cand & (~cand + 1);
      cand &= cand - 1;
      int v = std::countr_zero(bit);
      self(self, rset | bit, p & touch[v], x & touch[v]);
      p &= ~bit;
      x |= bit;
    }
  };
  std::uint64_t all =
      cnt == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cnt) - 1;
  bk(bk, 0, all, 0);
  return best;
}

}  // namespace twtie
