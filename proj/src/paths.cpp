#include "twtie/paths.hpp"

#include <algorithm>
#include <queue>

#include "twtie/errors.hpp"

namespace twtie {

namespace {

// Unit-capacity max flow (BFS augmentation). Arcs are added and scanned in a
// fixed order, so the flow and its path decomposition are deterministic.
struct FlowNet {
  struct Arc {
    int to, rev;
    int cap;
    bool forward;
  };
  std::vector<std::vector<Arc>> arcs;

  explicit FlowNet(int nodes) : arcs(nodes) {}

  void add(int from, int to) {
    arcs[from].push_back(
        {to, static_cast<int>(arcs[to].size()), 1, true});
    arcs[to].push_back(
        {from, static_cast<int>(arcs[from].size()) - 1, 0, false});
  }

  int max_flow(int s, int t) {
    int total = 0;
    std::vector<int> prev_node(arcs.size()), prev_arc(arcs.size());
    while (true) {
      std::vector<char> seen(arcs.size(), 0);
      std::queue<int> q;
      q.push(s);
      seen[s] = 1;
      while (!q.empty() && !seen[t]) {
        int v = q.front();
        q.pop();
        for (int i = 0; i < static_cast<int>(arcs[v].size()); ++i) {
          const Arc& a = arcs[v][i];
          if (a.cap > 0 && !seen[a.to]) {
            seen[a.to] = 1;
            prev_node[a.to] = v;
            prev_arc[a.to] = i;
            q.push(a.to);
          }
        }
      }
      if (!seen[t]) break;
      for (int v = t; v != s; v = prev_node[v]) {
        Arc& a = arcs[prev_node[v]][prev_arc[v]];
        a.cap -= 1;
        arcs[v][a.rev].cap += 1;
      }
      ++total;
    }
    return total;
  }
};

// A forward arc carries one unit of flow iff its residual capacity is 0.
bool saturated(const FlowNet::Arc& a) { return a.forward && a.cap == 0; }

PathFamily disjoint_paths_impl(const Graph& g, const VertexSet& a,
                               const VertexSet& b,
                               const VertexSet& forbidden,
                               const VertexSet* induced_edge_set) {
  int n = g.vertex_count();
  a.check_range(n, "disjoint_paths endpoints a");
  b.check_range(n, "disjoint_paths endpoints b");
  forbidden.check_range(n, "disjoint_paths forbidden");
  if (induced_edge_set) induced_edge_set->check_range(n, "disjoint_paths");

  PathFamily fam;
  // A vertex in a ∩ b is always served by the singleton path {v}: any
  // maximum family can be rearranged so that v's path is {v}, and other
  // paths then avoid v.
  VertexSet shared = a.set_intersect(b);
  for (int v : shared) fam.paths.push_back({v});
  VertexSet asrc = a.set_minus(shared);
  VertexSet bsink = b.set_minus(shared);

  std::vector<char> is_a(n, 0), is_b(n, 0), is_shared(n, 0), is_forb(n, 0),
      in_set(n, 0);
  for (int v : asrc) is_a[v] = 1;
  for (int v : bsink) is_b[v] = 1;
  for (int v : shared) is_shared[v] = 1;
  for (int v : forbidden) is_forb[v] = 1;
  if (induced_edge_set)
    for (int v : *induced_edge_set) in_set[v] = 1;

  // Node ids: in(v) = 2v, out(v) = 2v+1, source = 2n, sink = 2n+1. A vertex
  // is absent when consumed by a singleton path, or forbidden with no
  // endpoint role. A forbidden a-vertex keeps no incoming transit arcs (it
  // can only start a path); a forbidden b-vertex keeps no outgoing ones.
  int src = 2 * n, snk = 2 * n + 1;
  FlowNet net(2 * n + 2);
  auto present = [&](int v) {
    return !is_shared[v] && (!is_forb[v] || is_a[v] || is_b[v]);
  };
  auto can_emit = [&](int v) { return !is_forb[v] || is_a[v]; };
  auto can_receive = [&](int v) { return !is_forb[v] || is_b[v]; };

  for (int v = 0; v < n; ++v)
    if (present(v)) net.add(2 * v, 2 * v + 1);
  for (int v : asrc) net.add(src, 2 * v);
  for (auto [u, v] : g.edges()) {
    if (!present(u) || !present(v)) continue;
    bool internal_set_edge = induced_edge_set && in_set[u] && in_set[v];
    auto allow = [&](int from, int to) {
      if (!can_emit(from) || !can_receive(to)) return false;
      // An edge inside the marked set may only serve as a direct a-b hop.
      if (internal_set_edge) return is_a[from] && static_cast<bool>(is_b[to]);
      return true;
    };
    if (allow(u, v)) net.add(2 * u + 1, 2 * v);
    if (allow(v, u)) net.add(2 * v + 1, 2 * u);
  }
  for (int v : bsink) net.add(2 * v + 1, snk);

  fam.count = static_cast<int>(fam.paths.size()) + net.max_flow(src, snk);

  // Decompose the unit flow into paths. Each present vertex carries at most
  // one unit (the in->out arc has capacity 1), so from every used source arc
  // the saturated forward arcs trace a single walk ending at the sink. Any
  // circulation the augmentation left behind sits on untouched vertices and
  // is simply never visited.
  for (const auto& src_arc : net.arcs[src]) {
    if (!saturated(src_arc)) continue;
    std::vector<int> path{src_arc.to / 2};
    int node = src_arc.to + 1;  // out(v)
    while (node != snk) {
      const FlowNet::Arc* next = nullptr;
      for (const auto& arc : net.arcs[node])
        if (saturated(arc)) {
          next = &arc;
          break;
        }
      if (next == nullptr)
        throw internal_error("flow decomposition lost a unit");
      if (next->to == snk) break;
      path.push_back(next->to / 2);
      node = next->to + 1;
    }
    fam.paths.push_back(std::move(path));
  }
  return fam;
}

}  // namespace

PathFamily disjoint_paths(const Graph& g, const VertexSet& a,
                          const VertexSet& b,
                          const VertexSet& forbidden_internal) {
  return disjoint_paths_impl(g, a, b, forbidden_internal, nullptr);
}

PathFamily disjoint_paths_avoiding_edges(const Graph& g, const VertexSet& a,
                                         const VertexSet& b,
                                         const VertexSet& forbidden_internal,
                                         const VertexSet& edge_forbidden_set) {
  return disjoint_paths_impl(g, a, b, forbidden_internal,
                             &edge_forbidden_set);
}

}  // namespace twtie
