// Acceptance suite: one test case per criterion, each printing a summary
// line. The corpus is 200 seeded random graphs at three densities, the
// square grids up to 4x4, and psi(3,2). Oracles above their size budget are
// skipped only where a criterion's own bound says so; every assertion here
// is exact.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "twtie/bramble.hpp"
#include "twtie/branch_decomposition.hpp"
#include "twtie/branchwidth.hpp"
#include "twtie/cert_json.hpp"
#include "twtie/errors.hpp"
#include "twtie/families.hpp"
#include "twtie/linkage.hpp"
#include "twtie/minors.hpp"
#include "twtie/pace_io.hpp"
#include "twtie/report.hpp"
#include "twtie/separators.hpp"
#include "twtie/tangle.hpp"
#include "twtie/tree_products.hpp"
#include "twtie/treewidth.hpp"

using namespace twtie;

namespace {

struct Criterion {
  std::string name;
  int checks = 0;
  std::vector<std::string> failures;

  explicit Criterion(std::string n) : name(std::move(n)) {}

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }

  void finish() {
    std::printf("[criterion %s] %s (%d checks)\n", name.c_str(),
                failures.empty() ? "PASS" : "FAIL", checks);
    for (std::size_t i = 0; i < failures.size() && i < 5; ++i)
      std::printf("    failure: %s\n", failures[i].c_str());
    std::fflush(stdout);
    CHECK(failures.empty());
  }
};

const std::vector<std::pair<std::string, Graph>>& corpus() {
  static const auto c = oracle::standard_corpus();
  return c;
}

// Cached exact treewidth over the corpus (several criteria reuse it).
const TreewidthResult& tw_of(std::size_t idx) {
  static std::vector<std::optional<TreewidthResult>> cache(corpus().size());
  if (!cache[idx])
    cache[idx] = exact_treewidth(corpus()[idx].second, 16);
  return *cache[idx];
}

// The big-component bramble of a k-linked set: one element per small
// deletion set, namely the component keeping more than half of s.
Bramble linked_set_bramble(const Graph& g, const VertexSet& s, int k) {
  std::set<VertexSet> elems;
  int n = g.vertex_count();
  std::vector<int> cur;
  auto visit = [&]() {
    for (const auto& comp : components(g, VertexSet(cur)))
      if (2 * comp.set_intersect(s).size() > s.size()) {
        elems.insert(comp);
        return;
      }
  };
  auto rec = [&](auto&& self, int start, int remaining) -> void {
    visit();
    if (remaining == 0) return;
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      self(self, v + 1, remaining - 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, k - 1);
  return Bramble{{elems.begin(), elems.end()}};
}

}  // namespace

TEST_CASE("criterion 01: duality instances") {
  Criterion c("01 duality");
  for (std::size_t i = 0; i < corpus().size(); ++i) {
    const auto& [id, g] = corpus()[i];
    int bn = tw_of(i).width + 1;
    if (g.vertex_count() <= 10) {
      auto had = hadwiger_number(g);
      Bramble hb{had.model.branches};
      c.expect(validate_bramble(g, hb).ok, id + ": model bramble invalid");
      auto [order, hs] = bramble_order(g, hb);
      c.expect(order <= bn, id + ": model bramble order above tw+1");

      auto link = linkedness(g);
      Bramble lb = linked_set_bramble(g, link.witness, link.k);
      c.expect(validate_bramble(g, lb).ok, id + ": linked bramble invalid");
      auto [lorder, lhs] = bramble_order(g, lb);
      c.expect(lorder <= bn, id + ": linked bramble order above tw+1");
      c.expect(lorder >= link.k, id + ": linked bramble order below k");
    }
  }
  for (int k = 2; k <= 4; ++k) {
    auto [g, b] = grid_bramble(k);
    c.expect(validate_bramble(g, b).ok, "grid bramble invalid");
    auto [order, hs] = bramble_order(g, b);
    c.expect(order == k + 1,
             "grid_bramble(" + std::to_string(k) + ") order " +
                 std::to_string(order));
    c.expect(order <= exact_treewidth(g, 16).width + 1,
             "grid bramble exceeds duality bound");
  }
  c.finish();
}

TEST_CASE("criterion 02: normalization") {
  Criterion c("02 normalization");
  for (std::size_t i = 0; i < corpus().size(); ++i) {
    const auto& [id, g] = corpus()[i];
    const auto& tw = tw_of(i);
    auto norm = normalize_td(g, tw.td);
    auto v = validate_td(g, norm);
    c.expect(v.ok(), id + ": normalized td invalid");
    if (!v.ok()) continue;
    c.expect(*v == tw.width, id + ": width changed");
    bool uniform = true, one_in_one_out = true;
    for (const auto& bag : norm.bags)
      uniform = uniform && bag.size() == tw.width + 1;
    for (auto [x, y] : norm.tree_edges) {
      one_in_one_out = one_in_one_out &&
                       norm.bags[x].set_minus(norm.bags[y]).size() == 1 &&
                       norm.bags[y].set_minus(norm.bags[x]).size() == 1;
    }
    c.expect(uniform, id + ": bags not uniform");
    c.expect(one_in_one_out, id + ": adjacent bags differ by more than one");
  }
  c.finish();
}

TEST_CASE("criterion 03: branchwidth sandwich") {
  Criterion c("03 branchwidth");
  for (std::size_t i = 0; i < corpus().size(); ++i) {
    const auto& [id, g] = corpus()[i];
    if (g.edge_count() > 12 || g.edge_count() < 2) continue;
    auto bw = exact_branchwidth(g, 12);
    const auto& tw = tw_of(i);
    if (bw.width < 2) continue;
    c.expect(bw.width <= tw.width + 1, id + ": bw > tw+1");
    c.expect(2 * (tw.width + 1) <= 3 * bw.width, id + ": tw+1 > 3/2 bw");

    auto bd = td_to_bd(g, tw.td);
    auto bdw = validate_bd(g, bd);
    c.expect(bdw.ok() && *bdw <= tw.width + 1,
             id + ": td_to_bd outside lemma bound");
    REQUIRE(bw.bd.has_value());
    auto back = bd_to_td(g, *bw.bd);
    auto tdw = validate_td(g, back);
    c.expect(tdw.ok() && 2 * (*tdw + 1) <= std::max(4, 3 * bw.width),
             id + ": bd_to_td outside lemma bound");
  }
  c.finish();
}

TEST_CASE("criterion 04: separator chain") {
  Criterion c("04 separators");
  for (std::size_t i = 0; i < corpus().size(); ++i) {
    const auto& [id, g] = corpus()[i];
    if (g.vertex_count() > 8) continue;
    int bn = tw_of(i).width + 1;
    for (auto [cfrac, inv] :
         {std::pair{Rational(1, 2), 2}, {Rational(2, 3), 3}}) {
      int sep = sep_number(g, cfrac, false).k;
      int sep_star = sep_number(g, cfrac, true).k;
      c.expect(sep_star <= sep, id + ": sep* above sep");
      c.expect(sep <= bn, id + ": sep above tw+1");
      c.expect(bn <= inv * sep_star, id + ": tw+1 above 1/(1-c) sep*");
    }
  }
  // 100 random (graph, S) pairs through the constructive separator.
  for (int trial = 0; trial < 100; ++trial) {
    const auto& [id, g] = corpus()[trial % corpus().size()];
    if (g.vertex_count() > 10) continue;
    const auto& tw = tw_of(trial % corpus().size());
    std::vector<int> sv;
    for (int v = 0; v < g.vertex_count(); ++v)
      if ((trial * 13 + v * 5) % 3) sv.push_back(v);
    VertexSet s(sv);
    VertexSet x = separator_from_td(g, s, tw.td);
    c.expect(x.size() <= tw.width + 1, id + ": separator too large");
    c.expect(is_separator(g, {x, s, Rational(1, 2), false}).ok,
             id + ": constructed separator invalid");
  }
  c.finish();
}

TEST_CASE("criterion 05: psi tightness") {
  Criterion c("05 psi tightness");
  Graph g = psi(4, 3);  // n = 16 vertices
  // The clique side is an explicit witness at S = V.
  VertexSet a_side{0, 1, 2, 3};
  c.expect(is_separator(g, {a_side, VertexSet::full(16), Rational(1, 2),
                            false})
               .ok,
           "X = A is not a separator for S = V");
  auto res = sep_number(g, Rational(1, 2), false, 16);
  c.expect(res.k == 4, "sep_1/2(psi(4,3)) = " + std::to_string(res.k));
  // Exhaustive refutation of k = 3 on the worst set.
  bool any = false;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int start, int remaining) -> void {
    if (any) return;
    if (is_separator(g, {VertexSet(pick), res.worst_s, Rational(1, 2), false})
            .ok) {
      any = true;
      return;
    }
    if (remaining == 0) return;
    for (int v = start; v < 16; ++v) {
      pick.push_back(v);
      self(self, v + 1, remaining - 1);
      pick.pop_back();
    }
  };
  rec(rec, 0, 3);
  c.expect(!any, "some X of size <= 3 separates the worst S");
  c.finish();
}

TEST_CASE("criterion 06: linkedness") {
  Criterion c("06 linkedness");
  for (int n : {4, 6, 8})
    c.expect(linkedness(complete(n)).k == n / 2,
             "link(K_" + std::to_string(n) + ") wrong");
  {
    Graph g = psi(3, 2);
    auto link = linkedness(g);
    int tw = exact_treewidth(g).width;
    c.expect(link.k == 3, "link(psi(3,2)) = " + std::to_string(link.k));
    c.expect(link.k == tw + 1, "link(psi(3,2)) != tw+1");
  }
  for (std::size_t i = 0; i < corpus().size(); ++i) {
    const auto& [id, g] = corpus()[i];
    if (g.vertex_count() > 10) continue;
    int bn = tw_of(i).width + 1;
    int link = linkedness(g).k;
    c.expect(link <= bn, id + ": link above tw+1");
    c.expect(bn <= 2 * link, id + ": tw+1 above 2 link");
  }
  c.finish();
}

TEST_CASE("criterion 07: well-linked sets") {
  Criterion c("07 well-linked");
  for (int n = 1; n <= 5; ++n)
    c.expect(well_linked_number(complete(n)).size == n,
             "wl(K_" + std::to_string(n) + ") wrong");
  {
    Graph g = complete_bipartite(6, 3);
    c.expect(well_linked_number(g).size == 6, "wl(K_{6,3}) wrong");
    c.expect(exact_treewidth(g).width + 1 == 4, "tw(K_{6,3})+1 wrong");
  }
  for (std::size_t i = 0; i < corpus().size(); ++i) {
    const auto& [id, g] = corpus()[i];
    if (g.vertex_count() > 9) continue;
    int bn = tw_of(i).width + 1;
    auto wl = well_linked_number(g);
    int link = linkedness(g).k;
    c.expect(bn <= wl.size, id + ": tw+1 above wl");
    c.expect(wl.size <= 3 * link, id + ": wl above 3 link");
    // Internal and external verdicts agree on the witness and on a spread
    // of sampled sets.
    c.expect(is_well_linked(g, wl.witness, true).ok,
             id + ": witness not externally well-linked");
    for (int probe = 0; probe < 4; ++probe) {
      std::vector<int> sv;
      for (int v = 0; v < g.vertex_count(); ++v)
        if ((i + probe * 7 + v * 3) % 3) sv.push_back(v);
      VertexSet s(sv);
      c.expect(is_well_linked(g, s, false).ok == is_well_linked(g, s, true).ok,
               id + ": internal/external verdicts differ");
    }
  }
  c.finish();
}

TEST_CASE("criterion 08: tree products") {
  Criterion c("08 tree products");
  for (std::size_t i = 0; i < corpus().size(); ++i) {
    const auto& [id, g] = corpus()[i];
    const auto& tw = tw_of(i);
    auto lex = model_in_lex_product(g, tw.td);
    c.expect(validate_model(lex.model).ok && lex.k == tw.width + 1,
             id + ": lex product model invalid");
    auto cart = model_in_cart_product(g, 16);
    c.expect(validate_model(cart.model).ok && cart.k == tw.width + 1,
             id + ": cart product model invalid");
    auto cart_td = td_of_cart_product(cart.tree, cart.k);
    auto cv = validate_td(cart_product_tree(cart.tree, cart.k), cart_td);
    c.expect(cv.ok() && *cv <= cart.k, id + ": cart product td too wide");
  }
  for (int seed = 0; seed < 20; ++seed) {
    Graph t = random_tree(4 + seed % 5, 7000 + seed);
    Graph prod = lex_product(t, 2);
    c.expect(exact_treewidth(prod, 16).width == (t.edge_count() ? 3 : 1),
             "tw(T[K_2]) != 3 for tree seed " + std::to_string(seed));
  }
  c.finish();
}

TEST_CASE("criterion 09: tangles") {
  Criterion c("09 tangles");
  for (int k : {3, 4}) {
    auto [g, b] = grid_bramble(k);
    int order = k + 1;
    Tangle t = tangle_from_bramble(g, b, order);
    c.expect(validate_tangle(g, t).ok, "tangle condition fails");
    c.expect(validate_bramble(g, Bramble{t.elements}).ok,
             "tangle is not a bramble");
    auto [torder, hs] = bramble_order(g, Bramble{t.elements});
    c.expect(torder >= (order + 1) / 2, "tangle order below ceil((k+1)/2)");
  }
  // Branchwidth sits inside the factor-2 window of the constructed tangle
  // order on K_4 and C4.
  {
    Graph k4 = complete(4);
    Bramble singles{{VertexSet{0}, VertexSet{1}, VertexSet{2}, VertexSet{3}}};
    Tangle t = tangle_from_bramble(k4, singles, 4);
    auto [torder, hs] = bramble_order(k4, Bramble{t.elements});
    int bw = exact_branchwidth(k4).width;
    c.expect(torder <= bw && bw <= 2 * torder, "K_4 window violated");
  }
  {
    auto [c4, b] = grid_bramble(2);
    Tangle t = tangle_from_bramble(c4, b, 3);
    auto [torder, hs] = bramble_order(c4, Bramble{t.elements});
    int bw = exact_branchwidth(c4).width;
    c.expect(torder <= bw && bw <= 2 * torder, "C4 window violated");
  }
  c.finish();
}

TEST_CASE("criterion 10: minor chain") {
  Criterion c("10 minors");
  for (int k = 2; k <= 4; ++k) {
    auto [g, cert] = glm_from_grid(k);
    auto order = validate_glm(g, cert);
    c.expect(order.ok() && *order == k + 1, "glm certificate order wrong");
    Model m = model_in_product_from_glm(g, cert);
    c.expect(validate_model(m).ok, "lifted model invalid");
    for (int r : {2, 3}) {
      WeightedBramble wb = weighted_bramble_from_product_model(g, m, r);
      c.expect(validate_bramble(g, wb.bramble).ok, "projection not a bramble");
      c.expect(wb.check_load(g).ok, "load above 1");
      c.expect(wb.check_r_integral(r).ok, "weights not 1/r-integral");
      c.expect(wb.total() >= Rational(k + 1, 3), "total weight below t/3");
      if (r % 2 == 0)
        c.expect(wb.total() == Rational(k + 1, 2), "even-r total not t/2");
    }
  }
  for (int n = 1; n <= 4; ++n)
    c.expect(had_f_small(complete(n), std::nullopt) == Rational(n),
             "had_f(K_" + std::to_string(n) + ") wrong");
  for (std::size_t i = 0; i < corpus().size(); ++i) {
    const auto& [id, g] = corpus()[i];
    if (g.vertex_count() > 6) continue;
    int bn = tw_of(i).width + 1;
    Rational hf = had_f_small(g, std::nullopt);
    c.expect(hf <= bn, id + ": had_f above tw+1");
    for (int r : {2, 3}) {
      Rational hr = had_f_small(g, r);
      c.expect(hr <= hf, id + ": had_r above had_f");
    }
  }
  c.finish();
}

namespace {

int run_cli(const std::string& cmd) {
  int status = std::system((cmd + " > /dev/null 2>&1").c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("criterion 11: formats and CLI contract") {
  Criterion c("11 io and cli");
  // 100 byte-stable graph and decomposition round trips.
  for (int i = 0; i < 100; ++i) {
    const auto& [id, g] = corpus()[i];
    std::string once = emit_gr(g);
    std::istringstream in(once);
    c.expect(emit_gr(parse_gr(in)) == once, id + ": gr round trip");
    std::string td_once = emit_td(tw_of(i).td, g.vertex_count());
    std::istringstream tin(td_once);
    c.expect(emit_td(parse_td(tin), g.vertex_count()) == td_once,
             id + ": td round trip");
  }
  // Emitted certificates re-verify.
  {
    auto [g, b] = grid_bramble(3);
    c.expect(verify_certificate(bramble_to_json(b), g).valid, "bramble loop");
    Tangle t = tangle_from_bramble(g, b, 4);
    c.expect(verify_certificate(tangle_to_json(t), g).valid, "tangle loop");
    auto tw = exact_treewidth(g);
    VertexSet x = separator_from_td(g, VertexSet::full(9), tw.td);
    SeparatorCert sc{x, VertexSet::full(9), Rational(1, 2), false};
    c.expect(verify_certificate(separator_to_json(sc), g).valid,
             "separator loop");
    auto bw = exact_branchwidth(g);
    c.expect(verify_certificate(bd_to_json(g, *bw.bd), g).valid, "bd loop");
    auto [g2, glm] = glm_from_grid(3);
    c.expect(verify_certificate(glm_to_json(glm), g2).valid, "glm loop");
    Model m = model_in_product_from_glm(g2, glm);
    c.expect(verify_certificate(model_to_json(m), cartesian_with_k2(g2)).valid,
             "model loop");
    WeightedBramble wb = weighted_bramble_from_product_model(g2, m, 2);
    c.expect(verify_certificate(weighted_bramble_to_json(wb), g2).valid,
             "weighted bramble loop");
  }
  // Ten scripted CLI scenarios, exercising every exit code.
  const char* bin_env = std::getenv("TWTIE_BIN");
  if (!bin_env) {
    c.expect(false, "TWTIE_BIN not set; cannot run CLI scenarios");
    c.finish();
    return;
  }
  std::string bin = bin_env;
  std::string dir = std::getenv("TWTIE_TMP") ? std::getenv("TWTIE_TMP")
                                             : std::string("/tmp");
  auto path = [&](const std::string& name) { return dir + "/" + name; };
  {
    std::ofstream(path("p4.gr")) << emit_gr(path_graph(4));
    std::ofstream(path("k4.gr")) << emit_gr(complete(4));
    std::ofstream(path("grid3.gr")) << emit_gr(grid(3, 3));
    std::ofstream(path("p4.td"))
        << emit_td(exact_treewidth(path_graph(4)).td, 4);
    auto [g3, b3] = grid_bramble(3);
    std::ofstream(path("bramble.json")) << bramble_to_json(b3).dump();
    Bramble bad = b3;
    bad.elements.push_back(VertexSet{0, 8});
    std::ofstream(path("bad_bramble.json")) << bramble_to_json(bad).dump();
    std::ofstream(path("broken.json")) << "{ not json";
  }
  c.expect(run_cli(bin + " gen psi:4,2") == 0, "scenario 1: gen ok");
  c.expect(run_cli(bin + " gen psi:1,1") == 2, "scenario 2: bad psi params");
  c.expect(run_cli(bin + " gen mystery:4") == 2, "scenario 3: unknown family");
  c.expect(run_cli(bin + " gen path:30 | " + bin + " tw -") == 3,
           "scenario 4: budget gate");
  c.expect(run_cli(bin + " verify " + path("bramble.json") + " " +
                   path("grid3.gr")) == 0,
           "scenario 5: valid certificate");
  c.expect(run_cli(bin + " verify " + path("bad_bramble.json") + " " +
                   path("grid3.gr")) == 1,
           "scenario 6: invalid certificate");
  c.expect(run_cli(bin + " verify " + path("broken.json") + " " +
                   path("grid3.gr")) == 2,
           "scenario 7: malformed certificate");
  c.expect(run_cli(bin + " report " + path("p4.gr")) == 0,
           "scenario 8: report exits clean");
  c.expect(run_cli(bin + " convert normalize " + path("p4.gr") + " " +
                   path("p4.td")) == 0,
           "scenario 9: convert ok");
  c.expect(run_cli(bin + " gen psi:4,2 | " + bin + " report -") == 0,
           "scenario 10: piped report");
  std::ofstream(path("p16.gr")) << emit_gr(path_graph(16));
  c.expect(run_cli(bin + " tw " + path("p16.gr")) == 3,
           "scenario 11: default budget blocks n = 16");
  c.expect(run_cli("TWTIE_BUDGET=tw=16 " + bin + " tw " + path("p16.gr")) == 0,
           "scenario 11: environment override admits n = 16");
  c.finish();
}

TEST_CASE("report verdicts hold on the standard corpus") {
  Criterion c("XX report gate");
  Budgets budgets;
  for (std::size_t i = 0; i < corpus().size(); ++i) {
    const auto& [id, g] = corpus()[i];
    auto rep = parameter_report(g, id, budgets);
    c.expect(rep.all_verdicts_hold(), id + ": some verdict failed");
  }
  c.finish();
}
