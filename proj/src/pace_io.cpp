#include "twtie/pace_io.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "twtie/errors.hpp"

namespace twtie {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw input_error("line " + std::to_string(line) + ": " + what);
}

}  // namespace

Graph parse_gr(std::istream& in) {
  std::string line;
  int lineno = 0;
  long long n = -1, m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (n < 0) {
      std::string p, tw;
      if (!(ls >> p >> tw >> n >> m) || p != "p" || tw != "tw" || n < 0 ||
          m < 0)
        parse_fail(lineno, "expected header 'p tw <n> <m>'");
      continue;
    }
    long long u, v;
    if (!(ls >> u >> v)) parse_fail(lineno, "expected edge '<u> <v>'");
    if (u < 1 || u > n || v < 1 || v > n)
      parse_fail(lineno, "edge endpoint outside 1.." + std::to_string(n));
    edges.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1)});
  }
  if (n < 0) throw input_error("missing 'p tw' header");
  if (static_cast<long long>(edges.size()) != m)
    throw input_error("header announces " + std::to_string(m) +
                      " edges, found " + std::to_string(edges.size()));
  try {
    return Graph(static_cast<int>(n), std::move(edges));
  } catch (const input_error& e) {
    throw input_error(std::string("bad edge list: ") + e.what());
  }
}

std::string emit_gr(const Graph& g) {
  std::ostringstream out;
  out << "p tw " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

TreeDecomposition parse_td(std::istream& in) {
  std::string line;
  int lineno = 0;
  long long bags = -1, maxbag = -1, n = -1;
  TreeDecomposition td;
  std::vector<char> seen;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (bags < 0) {
      std::string s, tdw;
      if (!(ls >> s >> tdw >> bags >> maxbag >> n) || s != "s" ||
          tdw != "td" || bags < 0)
        parse_fail(lineno, "expected header 's td <bags> <maxbag> <n>'");
      td.bags.resize(bags);
      seen.assign(bags, 0);
      continue;
    }
    if (line[0] == 'b') {
      char b;
      long long id;
      ls >> b >> id;
      if (ls.fail() || id < 1 || id > bags)
        parse_fail(lineno, "bad bag line");
      if (seen[id - 1]) parse_fail(lineno, "duplicate bag id");
      seen[id - 1] = 1;
      std::vector<int> vs;
      long long v;
      while (ls >> v) {
        if (v < 1 || v > n)
          parse_fail(lineno, "bag vertex outside 1.." + std::to_string(n));
        vs.push_back(static_cast<int>(v - 1));
      }
      td.bags[id - 1] = VertexSet(vs);
      continue;
    }
    long long x, y;
    if (!(ls >> x >> y)) parse_fail(lineno, "expected tree edge '<i> <j>'");
    if (x < 1 || x > bags || y < 1 || y > bags || x == y)
      parse_fail(lineno, "tree edge outside 1.." + std::to_string(bags));
    td.tree_edges.push_back(
        {static_cast<int>(std::min(x, y) - 1), static_cast<int>(std::max(x, y) - 1)});
  }
  if (bags < 0) throw input_error("missing 's td' header");
  for (long long i = 0; i < bags; ++i)
    if (!seen[i])
      throw input_error("bag " + std::to_string(i + 1) + " is missing");
  return td;
}

std::string emit_td(const TreeDecomposition& td, int n) {
  int maxbag = 0;
  for (const auto& b : td.bags) maxbag = std::max(maxbag, b.size());
  std::ostringstream out;
  out << "s td " << td.node_count() << ' ' << maxbag << ' ' << n << '\n';
  for (int i = 0; i < td.node_count(); ++i) {
    out << "b " << i + 1;
    for (int v : td.bags[i]) out << ' ' << v + 1;
    out << '\n';
  }
  std::vector<Edge> edges = td.tree_edges;
  std::sort(edges.begin(), edges.end());
  for (auto [x, y] : edges) out << x + 1 << ' ' << y + 1 << '\n';
  return out.str();
}

}  // namespace twtie
