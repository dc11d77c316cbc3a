#include "twtie/tree_products.hpp"

#include <algorithm>

#include "twtie/chordal.hpp"
#include "twtie/errors.hpp"
#include "twtie/treewidth.hpp"

namespace twtie {

namespace {

void require_tree(const Graph& t) {
  if (!is_tree(t)) throw input_error("the product base must be a tree");
}

}  // namespace

Graph lex_product(const Graph& t, int k) {
  require_tree(t);
  if (k < 1) throw input_error("lex_product requires k >= 1");
  int nt = t.vertex_count();
  std::vector<Edge> edges;
  for (int x = 0; x < nt; ++x)
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) edges.push_back({x * k + i, x * k + j});
  for (auto [x, y] : t.edges())
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) edges.push_back({x * k + i, y * k + j});
  return Graph(nt * k, std::move(edges));
}

Graph cart_product_tree(const Graph& t, int k) {
  require_tree(t);
  if (k < 1) throw input_error("cart_product_tree requires k >= 1");
  int nt = t.vertex_count();
  std::vector<Edge> edges;
  for (int x = 0; x < nt; ++x)
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) edges.push_back({x * k + i, x * k + j});
  for (auto [x, y] : t.edges())
    for (int i = 0; i < k; ++i) edges.push_back({x * k + i, y * k + i});
  return Graph(nt * k, std::move(edges));
}

ProductModel model_in_lex_product(const Graph& g,
                                  const TreeDecomposition& td) {
  auto valid = validate_td(g, td);
  if (!valid.ok())
    throw input_error("model_in_lex_product: invalid decomposition: " +
                      valid.error);
  int k = *valid + 1;
  int t = td.node_count();
  Graph tree(t, td.tree_edges);

  // Root the tree at node 0 and fix each vertex's slot at the bag nearest
  // the root; children inherit the slots of shared vertices, and fresh
  // vertices take the smallest free slot. Each bag then injects into
  // 0..k-1 and every vertex keeps one slot across its whole subtree.
  std::vector<int> order, parent(t, -1);
  {
    std::vector<char> seen(t, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      order.push_back(x);
      for (int y : tree.neighbors(x))
        if (!seen[y]) {
          seen[y] = 1;
          parent[y] = x;
          stack.push_back(y);
        }
    }
  }
  int n = g.vertex_count();
  std::vector<int> slot(n, -1);
  std::vector<std::vector<int>> bag_slots(t);
  for (int x : order) {
    std::vector<char> used(k, 0);
    for (int v : td.bags[x])
      if (slot[v] >= 0 && (parent[x] < 0 || td.bags[parent[x]].contains(v)))
        used[slot[v]] = 1;
    for (int v : td.bags[x]) {
      bool inherited =
          slot[v] >= 0 && (parent[x] < 0 || td.bags[parent[x]].contains(v));
      if (inherited) continue;
      int free = 0;
      while (used[free]) ++free;
      slot[v] = free;
      used[free] = 1;
    }
  }

  ProductModel out;
  out.tree = tree;
  out.k = k;
  out.model.host = lex_product(tree, k);
  out.model.pattern = g;
  out.model.branches.resize(n);
  for (int x = 0; x < t; ++x)
    for (int v : td.bags[x]) out.model.branches[v].insert(x * k + slot[v]);
  return out;
}

TreeDecomposition td_of_lex_product(const Graph& t, int k) {
  require_tree(t);
  if (k < 1) throw input_error("td_of_lex_product requires k >= 1");
  int nt = t.vertex_count();
  TreeDecomposition td;
  td.bags.resize(nt);
  for (int x = 0; x < nt; ++x) {
    std::vector<int> bag;
    for (int i = 0; i < k; ++i) bag.push_back(x * k + i);
    td.bags[x] = VertexSet(bag);
  }
  for (auto [x, y] : t.edges()) {
    std::vector<int> bag;
    for (int i = 0; i < k; ++i) {
      bag.push_back(x * k + i);
      bag.push_back(y * k + i);
    }
    td.bags.emplace_back(bag);
    int mid = td.node_count() - 1;
    td.tree_edges.push_back({x, mid});
    td.tree_edges.push_back({mid, y});
  }
  return td;
}

ProductModel model_in_cart_product(const Graph& g, int tw_budget) {
  if (g.vertex_count() < 1)
    throw input_error("model_in_cart_product needs a vertex");
  auto tw = exact_treewidth(g, tw_budget);
  int k = tw.width + 1;
  Graph completed = chordal_completion(g, tw.td);
  auto elimination = peo(completed);
  if (!elimination)
    throw internal_error("model_in_cart_product: completion not chordal");

  // Greedy colouring along the reversed elimination ordering: when a vertex
  // is coloured, its already-coloured neighbors are its later neighbors,
  // which form a clique of size < k, so k colours always suffice.
  int n = g.vertex_count();
  std::vector<int> colour(n, -1);
  for (int i = n - 1; i >= 0; --i) {
    int v = (*elimination)[i];
    std::vector<char> used(k, 0);
    for (int w : completed.neighbors(v))
      if (colour[w] >= 0) {
        if (colour[w] >= k)
          throw internal_error("model_in_cart_product: colour overflow");
        used[colour[w]] = 1;
      }
    int c = 0;
    while (c < k && used[c]) ++c;
    if (c == k)
      throw internal_error("model_in_cart_product: needed more colours");
    colour[v] = c;
  }

  ProductModel out;
  out.tree = Graph(tw.td.node_count(), tw.td.tree_edges);
  out.k = k;
  out.model.host = cart_product_tree(out.tree, k);
  out.model.pattern = g;
  out.model.branches.resize(n);
  for (int x = 0; x < tw.td.node_count(); ++x)
    for (int v : tw.td.bags[x])
      out.model.branches[v].insert(x * k + colour[v]);
  return out;
}

TreeDecomposition td_of_cart_product(const Graph& t, int k) {
  require_tree(t);
  if (k < 1) throw input_error("td_of_cart_product requires k >= 1");
  int nt = t.vertex_count();
  TreeDecomposition td;
  td.bags.resize(nt);
  for (int x = 0; x < nt; ++x) {
    std::vector<int> bag;
    for (int i = 0; i < k; ++i) bag.push_back(x * k + i);
    td.bags[x] = VertexSet(bag);
  }
  // Subdivide each tree edge k times; the j-th bag keeps the top k-j+1
  // slots of x and gains the bottom j slots of y (1-based j).
  for (auto [x, y] : t.edges()) {
    int prev = x;
    for (int j = 1; j <= k; ++j) {
      std::vector<int> bag;
      for (int i = 0; i < k; ++i) {
        if (i + 1 >= j) bag.push_back(x * k + i);
        if (i + 1 <= j) bag.push_back(y * k + i);
      }
      td.bags.emplace_back(bag);
      int node = td.node_count() - 1;
      td.tree_edges.push_back({prev, node});
      prev = node;
    }
    td.tree_edges.push_back({prev, y});
  }
  return td;
}

}  // namespace twtie
