#include "twtie/families.hpp"

#include <random>
#include <sstream>

#include "twtie/errors.hpp"

namespace twtie {

Graph psi(int n, int k) {
  if (n < 2 || k < 1) throw input_error("psi requires n >= 2, k >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  // Vertex a of A is paired with the block n+ak .. n+ak+k-1 of B and joined
  // to every other B vertex.
  for (int a = 0; a < n; ++a)
    for (int bi = 0; bi < n * k; ++bi)
      if (bi / k != a) edges.push_back({a, n + bi});
  return Graph(n + n * k, std::move(edges));
}

Graph grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw input_error("grid requires positive sides");
  std::vector<Edge> edges;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
    }
  return Graph(rows * cols, std::move(edges));
}

Graph complete(int n) {
  if (n < 1) throw input_error("complete requires n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1)
    throw input_error("complete_bipartite requires positive sides");
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
  return Graph(a + b, std::move(edges));
}

Graph kn_minus_matching(int n) {
  if (n < 2) throw input_error("kn_minus_matching requires n >= 2");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) edges.push_back({i, n + j});
  return Graph(2 * n, std::move(edges));
}

Graph path_graph(int n) {
  if (n < 1) throw input_error("path requires n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw input_error("random_tree requires n >= 1");
  if (n == 1) return Graph(1, {});
  if (n == 2) return Graph(2, {{0, 1}});
  std::mt19937 rng(static_cast<std::uint32_t>(seed));
  std::vector<int> pruefer(n - 2);
  for (int& x : pruefer) x = static_cast<int>(rng() % n);
  // Standard linear-time Pruefer decode; the final edge always attaches to
  // vertex n-1.
  std::vector<int> deg(n, 1);
  for (int x : pruefer) ++deg[x];
  std::vector<Edge> edges;
  int ptr = 0;
  while (deg[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int x : pruefer) {
    edges.push_back({leaf, x});
    if (--deg[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (deg[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.push_back({leaf, n - 1});
  return Graph(n, std::move(edges));
}

Graph gnp(int n, const Rational& p, std::uint64_t seed) {
  if (n < 1) throw input_error("gnp requires n >= 1");
  if (p < 0 || p > 1) throw input_error("gnp probability outside [0, 1]");
  std::mt19937 rng(static_cast<std::uint32_t>(seed));
  std::uint64_t num = static_cast<std::uint64_t>(numerator(p));
  std::uint64_t den = static_cast<std::uint64_t>(denominator(p));
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() % den < num) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

Graph generate(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::Psi:
      return psi(spec.a, spec.b);
    case FamilyKind::Grid:
      return grid(spec.a, spec.b);
    case FamilyKind::Complete:
      return complete(spec.a);
    case FamilyKind::CompleteBipartite:
      return complete_bipartite(spec.a, spec.b);
    case FamilyKind::KnMinusMatching:
      return kn_minus_matching(spec.a);
    case FamilyKind::Path:
      return path_graph(spec.a);
    case FamilyKind::RandomTree:
      return random_tree(spec.a, spec.seed);
    case FamilyKind::Gnp:
      return gnp(spec.a, spec.p, spec.seed);
  }
  throw input_error("unknown family kind");
}

std::string FamilySpec::str() const {
  std::ostringstream out;
  switch (kind) {
    case FamilyKind::Psi:
      out << "psi:" << a << ',' << b;
      break;
    case FamilyKind::Grid:
      out << "grid:" << a << ',' << b;
      break;
    case FamilyKind::Complete:
      out << "complete:" << a;
      break;
    case FamilyKind::CompleteBipartite:
      out << "complete_bipartite:" << a << ',' << b;
      break;
    case FamilyKind::KnMinusMatching:
      out << "kn_minus_matching:" << a;
      break;
    case FamilyKind::Path:
      out << "path:" << a;
      break;
    case FamilyKind::RandomTree:
      out << "random_tree:" << a << ",seed=" << seed;
      break;
    case FamilyKind::Gnp:
      out << "gnp:" << a << ',' << rational_str(p) << ",seed=" << seed;
      break;
  }
  return out.str();
}

FamilySpec parse_family_spec(const std::string& text) {
  auto colon = text.find(':');
  std::string kind = text.substr(0, colon);
  std::vector<std::string> args;
  if (colon != std::string::npos) {
    std::string rest = text.substr(colon + 1);
    std::istringstream in(rest);
    std::string item;
    while (std::getline(in, item, ',')) args.push_back(item);
  }

  FamilySpec spec;
  if (!args.empty() && args.back().rfind("seed=", 0) == 0) {
    try {
      spec.seed = std::stoull(args.back().substr(5));
    } catch (const std::exception&) {
      throw input_error("malformed seed in '" + text + "'");
    }
    args.pop_back();
  }

  auto int_arg = [&](std::size_t i) {
    if (i >= args.size())
      throw input_error("family spec '" + text + "' is missing a parameter");
    try {
      return std::stoi(args[i]);
    } catch (const std::exception&) {
      throw input_error("bad integer '" + args[i] + "' in '" + text + "'");
    }
  };
  auto expect_args = [&](std::size_t k) {
    if (args.size() != k)
      throw input_error("family spec '" + text + "' takes " +
                        std::to_string(k) + " parameter(s)");
  };

  if (kind == "psi") {
    spec.kind = FamilyKind::Psi;
    expect_args(2);
    spec.a = int_arg(0);
    spec.b = int_arg(1);
  } else if (kind == "grid") {
    spec.kind = FamilyKind::Grid;
    expect_args(2);
    spec.a = int_arg(0);
    spec.b = int_arg(1);
  } else if (kind == "complete") {
    spec.kind = FamilyKind::Complete;
    expect_args(1);
    spec.a = int_arg(0);
  } else if (kind == "complete_bipartite") {
    spec.kind = FamilyKind::CompleteBipartite;
    expect_args(2);
    spec.a = int_arg(0);
    spec.b = int_arg(1);
  } else if (kind == "kn_minus_matching") {
    spec.kind = FamilyKind::KnMinusMatching;
    expect_args(1);
    spec.a = int_arg(0);
  } else if (kind == "path") {
    spec.kind = FamilyKind::Path;
    expect_args(1);
    spec.a = int_arg(0);
  } else if (kind == "random_tree") {
    spec.kind = FamilyKind::RandomTree;
    expect_args(1);
    spec.a = int_arg(0);
  } else if (kind == "gnp") {
    spec.kind = FamilyKind::Gnp;
    expect_args(2);
    spec.a = int_arg(0);
    spec.p = parse_rational(args[1]);
    if (spec.p < 0 || spec.p > 1)
      throw input_error("gnp probability outside [0, 1] in '" + text + "'");
  } else {
    throw input_error("unknown family kind '" + kind + "'");
  }
  return spec;
}

}  // namespace twtie
