#include "twtie/report.hpp"

#include <algorithm>
#include <sstream>

#include "twtie/bramble.hpp"
#include "twtie/branchwidth.hpp"
#include "twtie/cert_json.hpp"
#include "twtie/errors.hpp"
#include "twtie/families.hpp"
#include "twtie/linkage.hpp"
#include "twtie/minors.hpp"
#include "twtie/pace_io.hpp"
#include "twtie/separators.hpp"
#include "twtie/tree_products.hpp"
#include "twtie/treewidth.hpp"

namespace twtie {

using nlohmann::json;

Budgets parse_budget_overrides(const std::string& text, Budgets base) {
  if (text.empty()) return base;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw input_error("budget override must look like 'tw=16'");
    std::string key = item.substr(0, eq);
    int value;
    try {
      value = std::stoi(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw input_error("bad budget value in '" + item + "'");
    }
    if (key == "tw")
      base.treewidth = value;
    else if (key == "bw")
      base.branchwidth_edges = value;
    else if (key == "sep")
      base.separation = value;
    else if (key == "link")
      base.linkedness = value;
    else if (key == "wl")
      base.well_linked = value;
    else if (key == "had")
      base.hadwiger = value;
    else if (key == "hadf")
      base.had_fractional = value;
    else
      throw input_error("unknown budget key '" + key + "'");
  }
  return base;
}

bool ParameterReport::all_verdicts_hold() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const Verdict& v) { return v.holds; });
}

json ParameterReport::to_json() const {
  json vj = json::array();
  for (const auto& v : verdicts)
    vj.push_back(json{
        {"name", v.name}, {"holds", v.holds}, {"lhs", v.lhs}, {"rhs", v.rhs}});
  return json{{"graph", graph_id},
              {"values", values},
              {"witnesses", witnesses},
              {"constructions", constructions},
              {"verdicts", vj},
              {"all_verdicts_hold", all_verdicts_hold()}};
}

std::string ParameterReport::to_text() const {
  std::ostringstream out;
  out << "graph " << graph_id << "\n";
  out << "  values:\n";
  for (auto it = values.begin(); it != values.end(); ++it)
    out << "    " << it.key() << " = "
        << (it.value().is_string() ? it.value().get<std::string>()
                                   : it.value().dump())
        << "\n";
  out << "  constructions:\n";
  for (auto it = constructions.begin(); it != constructions.end(); ++it)
    out << "    " << it.key() << ": " << it.value().get<std::string>() << "\n";
  out << "  verdicts:\n";
  for (const auto& v : verdicts)
    out << "    " << (v.holds ? "ok  " : "FAIL") << ' ' << v.name << "  ("
        << v.lhs << " vs " << v.rhs << ")\n";
  out << (all_verdicts_hold() ? "  all verdicts hold\n"
                              : "  SOME VERDICTS FAILED\n");
  return out.str();
}

namespace {

constexpr const char* kBudgetExceeded = "budget-exceeded";

template <class T, class Fn>
std::optional<T> try_within_budget(json& values, const std::string& key,
                                   Fn&& fn) {
  try {
    T value = fn();
    if constexpr (std::is_same_v<T, Rational>)
      values[key] = rational_str(value);
    else
      values[key] = value;
    return value;
  } catch (const budget_error&) {
    values[key] = kBudgetExceeded;
    return std::nullopt;
  }
}

}  // namespace

ParameterReport parameter_report(const Graph& g, const std::string& graph_id,
                                 const Budgets& budgets, Exec exec) {
  ParameterReport rep;
  rep.graph_id = graph_id;
  rep.values = json::object();
  rep.witnesses = json::object();
  rep.constructions = json::object();
  rep.values["n"] = g.vertex_count();
  rep.values["m"] = g.edge_count();

  auto verdict = [&](const std::string& name, const std::string& lhs,
                     const std::string& rhs, bool holds) {
    rep.verdicts.push_back({name, holds, lhs, rhs});
  };
  auto int_verdict = [&](const std::string& name, long long lhs,
                         long long rhs) {
    verdict(name, std::to_string(lhs), std::to_string(rhs), lhs <= rhs);
  };

  // Exact treewidth underpins most of the battery; bn is its duality proxy.
  std::optional<TreewidthResult> tw;
  try {
    tw = exact_treewidth(g, budgets.treewidth);
    rep.values["tw"] = tw->width;
    rep.values["bn_proxy"] = tw->width + 1;
  } catch (const budget_error&) {
    rep.values["tw"] = kBudgetExceeded;
    rep.values["bn_proxy"] = kBudgetExceeded;
  }
  std::optional<int> bn;
  if (tw) bn = tw->width + 1;

  // Branchwidth and its sandwich.
  std::optional<BranchwidthResult> bwres;
  try {
    bwres = exact_branchwidth(g, budgets.branchwidth_edges);
    rep.values["bw"] = bwres->width;
    if (bwres->width >= 2) rep.values["tn_proxy"] = bwres->width;
  } catch (const budget_error&) {
    rep.values["bw"] = kBudgetExceeded;
  }
  if (bwres && bn && bwres->width >= 2) {
    int_verdict("bw_le_bn", bwres->width, *bn);
    int_verdict("bn_le_ceil_3bw_2", *bn, (3 * bwres->width + 1) / 2);
  }

  // Separation numbers for the two natural fractions.
  auto sep_value = [&](const Rational& c, bool star) {
    return sep_number(g, c, star, budgets.separation, exec).k;
  };
  auto sep_h = try_within_budget<int>(rep.values, "sep_half", [&] {
    return sep_value(Rational(1, 2), false);
  });
  auto sep_hs = try_within_budget<int>(rep.values, "sep_half_star", [&] {
    return sep_value(Rational(1, 2), true);
  });
  auto sep_t = try_within_budget<int>(rep.values, "sep_two_thirds", [&] {
    return sep_value(Rational(2, 3), false);
  });
  auto sep_ts = try_within_budget<int>(rep.values, "sep_two_thirds_star", [&] {
    return sep_value(Rational(2, 3), true);
  });
  if (sep_h && sep_hs) int_verdict("sep_star_le_sep(1/2)", *sep_hs, *sep_h);
  if (sep_h && bn) int_verdict("sep_le_bn(1/2)", *sep_h, *bn);
  if (sep_hs && bn) int_verdict("bn_le_2_sep_star(1/2)", *bn, 2LL * *sep_hs);
  if (sep_t && sep_ts) int_verdict("sep_star_le_sep(2/3)", *sep_ts, *sep_t);
  if (sep_t && bn) int_verdict("sep_le_bn(2/3)", *sep_t, *bn);
  if (sep_ts && bn) int_verdict("bn_le_3_sep_star(2/3)", *bn, 3LL * *sep_ts);

  // Linkedness and the well-linked number.
  std::optional<LinkednessResult> link;
  try {
    link = linkedness(g, budgets.linkedness, exec);
    rep.values["link"] = link->k;
    rep.witnesses["linked_set"] = link->witness.vertices();
  } catch (const budget_error&) {
    rep.values["link"] = kBudgetExceeded;
  }
  std::optional<WellLinkedResult> wl;
  try {
    wl = well_linked_number(g, budgets.well_linked, exec);
    rep.values["wl"] = wl->size;
    rep.witnesses["well_linked_set"] = wl->witness.vertices();
    rep.constructions["well_linked_external_agrees"] =
        is_well_linked(g, wl->witness, true).ok ? "valid" : "invalid";
  } catch (const budget_error&) {
    rep.values["wl"] = kBudgetExceeded;
  }
  if (link && bn) {
    int_verdict("link_le_bn", link->k, *bn);
    int_verdict("bn_le_2_link", *bn, 2LL * link->k);
  }
  if (wl && bn) int_verdict("bn_le_wl", *bn, wl->size);
  if (wl && link) int_verdict("wl_le_3_link", wl->size, 3LL * link->k);

  // Hadwiger numbers: exact, of the K_2 product, fractional and r-integral.
  std::optional<HadwigerResult> had;
  try {
    had = hadwiger_number(g, budgets.hadwiger);
    rep.values["had"] = had->t;
    rep.witnesses["hadwiger_model"] = model_to_json(had->model);
  } catch (const budget_error&) {
    rep.values["had"] = kBudgetExceeded;
  }
  std::optional<int> had_sq;
  {
    Graph product = cartesian_with_k2(g);
    try {
      had_sq = hadwiger_number(product, budgets.hadwiger).t;
      rep.values["had_square"] = *had_sq;
    } catch (const budget_error&) {
      rep.values["had_square"] = kBudgetExceeded;
    }
  }
  auto had_f = try_within_budget<Rational>(rep.values, "had_f", [&] {
    return had_f_small(g, std::nullopt, budgets.had_fractional);
  });
  auto had_r2 = try_within_budget<Rational>(rep.values, "had_r2", [&] {
    return had_f_small(g, 2, budgets.had_fractional);
  });
  auto had_r3 = try_within_budget<Rational>(rep.values, "had_r3", [&] {
    return had_f_small(g, 3, budgets.had_fractional);
  });
  auto rat_verdict = [&](const std::string& name, const Rational& lhs,
                         const Rational& rhs) {
    verdict(name, rational_str(lhs), rational_str(rhs), lhs <= rhs);
  };
  if (had && had_f) rat_verdict("had_le_had_f", had->t, *had_f);
  if (had_f && bn) rat_verdict("had_f_le_bn", *had_f, *bn);
  if (had_r2 && had_f) rat_verdict("had_r2_le_had_f", *had_r2, *had_f);
  if (had_r3 && had_f) rat_verdict("had_r3_le_had_f", *had_r3, *had_f);
  if (had_sq && had_r2)
    rat_verdict("had_square_le_2_had_r2", *had_sq, 2 * *had_r2);
  if (had_sq && had_r3)
    rat_verdict("had_square_le_3_had_r3", *had_sq, 3 * *had_r3);
  if (had_sq && had_f)
    rat_verdict("had_square_le_2_had_f", *had_sq, 2 * *had_f);

  // A bramble built from the complete-minor witness; its exact order stays
  // below the duality proxy.
  if (had && bn && g.vertex_count() <= 64) {
    Bramble b{had->model.branches};
    auto [order, hs] = bramble_order(g, b);
    int_verdict("model_bramble_order_le_bn", order, *bn);
    rep.witnesses["model_bramble"] = bramble_to_json(b);
  }

  // Square grids carry their canonical lower-bound certificates.
  {
    int k = 0;
    while ((k + 1) * (k + 1) <= g.vertex_count()) ++k;
    if (k >= 2 && k * k == g.vertex_count() && g == grid(k, k)) {
      auto [gg, gb] = grid_bramble(k);
      auto [order, hs] = bramble_order(gg, gb);
      rep.values["grid_bramble_order"] = order;
      verdict("grid_bramble_order_eq_k_plus_1", std::to_string(order),
              std::to_string(k + 1), order == k + 1);
      auto [g2, glm] = glm_from_grid(k);
      auto glm_order = validate_glm(g2, glm);
      if (glm_order.ok()) {
        rep.values["glm_order"] = *glm_order;
        if (had_sq) int_verdict("glm_le_had_square", *glm_order, *had_sq);
      }
      rep.witnesses["grid_bramble"] = bramble_to_json(gb);
      rep.witnesses["glm"] = glm_to_json(glm);
    }
  }

  // Constructions driven by the minimum-width decomposition.
  if (tw) {
    const auto& td = tw->td;
    rep.witnesses["td"] = emit_td(td, g.vertex_count());

    auto norm = normalize_td(g, td);
    auto nv = validate_td(g, norm);
    rep.constructions["normalize_td"] =
        nv.ok() && *nv == tw->width && is_normalized(norm) ? "valid"
                                                           : "invalid";

    auto sep_x = separator_from_td(g, VertexSet::full(g.vertex_count()), td);
    SeparatorCert cert{sep_x, VertexSet::full(g.vertex_count()),
                       Rational(1, 2), false};
    bool sep_ok =
        is_separator(g, cert).ok && sep_x.size() <= tw->width + 1;
    rep.constructions["separator_from_td"] = sep_ok ? "valid" : "invalid";
    rep.witnesses["separator_half_all"] = separator_to_json(cert);

    auto lex = model_in_lex_product(g, td);
    rep.constructions["lex_product_model"] =
        validate_model(lex.model).ok && lex.k == tw->width + 1 ? "valid"
                                                               : "invalid";
    try {
      auto cart = model_in_cart_product(g, budgets.treewidth);
      bool cart_ok = validate_model(cart.model).ok && cart.k == tw->width + 1;
      auto cart_td = td_of_cart_product(cart.tree, cart.k);
      auto cv = validate_td(cart_product_tree(cart.tree, cart.k), cart_td);
      rep.constructions["cart_product_model"] = cart_ok ? "valid" : "invalid";
      rep.constructions["cart_product_td"] =
          cv.ok() && *cv <= cart.k ? "valid" : "invalid";
    } catch (const budget_error&) {
      rep.constructions["cart_product_model"] = kBudgetExceeded;
    }

    if (g.edge_count() >= 2) {
      auto bd = td_to_bd(g, td);
      auto bw_of_bd = validate_bd(g, bd);
      rep.constructions["td_to_bd_within_bound"] =
          bw_of_bd.ok() && *bw_of_bd <= tw->width + 1 ? "valid" : "invalid";
    }
  }
  if (bwres && bwres->bd) {
    auto back = bd_to_td(g, *bwres->bd);
    auto bv = validate_td(g, back);
    // width+1 <= max(2, ceil(3 bw / 2))
    long long bound = std::max(2, (3 * bwres->width + 1) / 2);
    rep.constructions["bd_to_td_within_bound"] =
        bv.ok() && *bv + 1 <= bound ? "valid" : "invalid";
  }

  return rep;
}

}  // namespace twtie
