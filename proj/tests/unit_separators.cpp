#include <doctest.h>

#include "oracles.hpp"
#include "twtie/errors.hpp"
#include "twtie/families.hpp"
#include "twtie/separators.hpp"
#include "twtie/treewidth.hpp"

using namespace twtie;

TEST_CASE("is_separator: examples") {
  Graph p4 = path_graph(4);
  // Removing the middle pair splits V into singletons.
  SeparatorCert ok{VertexSet{1, 2}, VertexSet::full(4), Rational(1, 2), false};
  CHECK(is_separator(p4, ok).ok);

  SeparatorCert bad{VertexSet{0}, VertexSet::full(4), Rational(1, 2), false};
  auto fail = is_separator(complete(4), bad);
  CHECK_FALSE(fail.ok);
  CHECK(fail.why.find("{1, 2, 3}") != std::string::npos);

  SeparatorCert out_of_range{VertexSet{0}, VertexSet::full(4), Rational(1, 3),
                             false};
  CHECK_THROWS_AS(is_separator(p4, out_of_range), input_error);
  SeparatorCert too_big{VertexSet{0}, VertexSet::full(4), Rational(1), false};
  CHECK_THROWS_AS(is_separator(p4, too_big), input_error);
}

TEST_CASE("a standard separator is also a starred one") {
  for (int seed = 0; seed < 40; ++seed) {
    Graph g = gnp(7, Rational(seed % 3 + 1, 4), 700 + seed);
    VertexSet x{seed % 7, (seed * 2 + 1) % 7};
    VertexSet s = VertexSet::full(7).set_minus(VertexSet{(seed * 5) % 7});
    SeparatorCert std_cert{x, s, Rational(1, 2), false};
    SeparatorCert star_cert{x, s, Rational(1, 2), true};
    if (is_separator(g, std_cert).ok) CHECK(is_separator(g, star_cert).ok);
  }
}

TEST_CASE("sep_number: examples") {
  // K_4 at c = 1/2: only X = V empties every component.
  CHECK(sep_number(complete(4), Rational(1, 2), false).k == 4);
  CHECK(sep_number(path_graph(4), Rational(1, 2), false).k <= 2);
}

TEST_CASE("sep_number agrees with the naive double enumeration") {
  for (int seed = 0; seed < 12; ++seed) {
    Graph g = gnp(6, Rational(seed % 3 + 1, 4), 900 + seed);
    for (bool starred : {false, true}) {
      for (auto c : {Rational(1, 2), Rational(2, 3)}) {
        int fast = sep_number(g, c, starred).k;
        CHECK(fast == oracle::sep_number_naive(g, c, starred));
      }
    }
  }
}

TEST_CASE("sep_number worst set witness is genuine") {
  Graph g = psi(3, 2);
  auto res = sep_number(g, Rational(1, 2), false);
  CHECK(res.k == 3);
  // No X below k works for the witness set.
  bool any = false;
  int n = g.vertex_count();
  std::vector<int> pick;
  auto rec = [&](auto&& self, int start, int remaining) -> void {
    if (any) return;
    SeparatorCert cert{VertexSet(pick), res.worst_s, Rational(1, 2), false};
    if (is_separator(g, cert).ok) {
      any = true;
      return;
    }
    if (remaining == 0) return;
    for (int v = start; v < n; ++v) {
      pick.push_back(v);
      self(self, v + 1, remaining - 1);
      pick.pop_back();
    }
  };
  rec(rec, 0, res.k - 1);
  CHECK_FALSE(any);
}

TEST_CASE("separator_from_td: examples and lemma bound") {
  Graph p4 = path_graph(4);
  auto tw = exact_treewidth(p4);
  VertexSet x = separator_from_td(p4, VertexSet::full(4), tw.td);
  CHECK(x.size() <= tw.width + 1);
  CHECK(is_separator(p4, {x, VertexSet::full(4), Rational(1, 2), false}).ok);

  TreeDecomposition single;
  single.bags = {VertexSet::full(5)};
  CHECK(separator_from_td(complete(5), VertexSet::full(5), single) ==
        VertexSet::full(5));

  Graph g33 = grid(3, 3);
  auto tw33 = exact_treewidth(g33);
  VertexSet top{0, 1, 2};
  VertexSet sep = separator_from_td(g33, top, tw33.td);
  CHECK(sep.size() <= 4);
  CHECK(is_separator(g33, {sep, top, Rational(1, 2), false}).ok);
}

TEST_CASE("separator_from_td over random sets") {
  for (int seed = 0; seed < 30; ++seed) {
    Graph g = gnp(8, Rational(seed % 3 + 1, 4), 1100 + seed);
    auto tw = exact_treewidth(g);
    std::vector<int> sv;
    for (int v = 0; v < 8; ++v)
      if ((seed * 31 + v * 7) % 3) sv.push_back(v);
    VertexSet s(sv);
    VertexSet x = separator_from_td(g, s, tw.td);
    CHECK(x.size() <= tw.width + 1);
    CHECK(is_separator(g, {x, s, Rational(1, 2), false}).ok);
  }
}

TEST_CASE("partition_components") {
  // Four disjoint triangles, 12 vertices, each component holds 3 <= 6.
  std::vector<Edge> edges;
  for (int t = 0; t < 4; ++t)
    for (int i = 0; i < 3; ++i)
      edges.push_back({3 * t + i, 3 * t + (i + 1) % 3});
  Graph triangles(12, edges);
  auto parts =
      partition_components(triangles, {}, VertexSet::full(12), 3);
  CHECK(parts.size() <= 3);
  for (const auto& part : parts) {
    int weight = 0;
    for (const auto& comp : part) weight += comp.size();
    CHECK(2 * weight <= 12);
  }

  // With no s-weight at stake everything merges into one part.
  CHECK(partition_components(path_graph(4), {}, VertexSet{}, 3).size() == 1);
  // Two equal halves sit exactly at the cap.
  Graph two_pairs(4, {{0, 1}, {2, 3}});
  CHECK(partition_components(two_pairs, {}, VertexSet::full(4), 3).size() ==
        2);

  // Component weights 4, 3, 3 against cap 2/3 of 10.
  std::vector<Edge> e2;
  for (int i = 0; i + 1 < 4; ++i) e2.push_back({i, i + 1});
  e2.push_back({4, 5});
  e2.push_back({5, 6});
  e2.push_back({7, 8});
  e2.push_back({8, 9});
  Graph three(10, e2);
  auto parts2 = partition_components(three, {}, VertexSet::full(10), 2);
  REQUIRE(parts2.size() == 2);
  for (const auto& part : parts2) {
    int weight = 0;
    for (const auto& comp : part) weight += comp.size();
    CHECK(3 * weight <= 20);
  }

  // A heavy component violates the precondition.
  CHECK_THROWS_AS(
      partition_components(complete(4), {}, VertexSet::full(4), 3),
      input_error);
}

TEST_CASE("partition covers every component") {
  for (int seed = 0; seed < 20; ++seed) {
    Graph g = gnp(8, Rational(1, 4), 1300 + seed);
    VertexSet x{seed % 8};
    VertexSet s = VertexSet::full(8);
    auto comps = components(g, x);
    int heaviest = 0;
    for (const auto& comp : comps)
      heaviest = std::max(heaviest,
                          comp.set_intersect(s.set_minus(x)).size());
    if (2 * heaviest > s.set_minus(x).size()) continue;
    auto parts = partition_components(g, x, s, 3);
    std::size_t covered = 0;
    for (const auto& part : parts) covered += part.size();
    CHECK(covered == comps.size());
  }
}
