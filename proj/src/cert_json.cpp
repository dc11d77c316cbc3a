#include "twtie/cert_json.hpp"

#include "twtie/errors.hpp"
#include "twtie/rational.hpp"

namespace twtie {

namespace {

using nlohmann::json;

json vs_to_json(const VertexSet& s) { return json(s.vertices()); }

VertexSet vs_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw input_error(std::string(what) + ": expected array");
  std::vector<int> vs;
  for (const auto& x : j) {
    if (!x.is_number_integer())
      throw input_error(std::string(what) + ": expected integer vertices");
    vs.push_back(x.get<int>());
  }
  return VertexSet(vs);
}

std::vector<VertexSet> vslist_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw input_error(std::string(what) + ": expected array");
  std::vector<VertexSet> out;
  for (const auto& x : j) out.push_back(vs_from_json(x, what));
  return out;
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return json{{"n", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
  if (!j.contains("n") || !j.contains("edges"))
    throw input_error("graph document needs 'n' and 'edges'");
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw input_error("graph edge must be a pair");
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return Graph(j.at("n").get<int>(), std::move(edges));
}

const json& field(const json& doc, const char* name) {
  if (!doc.contains(name))
    throw input_error(std::string("certificate is missing '") + name + "'");
  return doc.at(name);
}

}  // namespace

json bramble_to_json(const Bramble& b) {
  json elements = json::array();
  for (const auto& e : b.elements) elements.push_back(vs_to_json(e));
  return json{{"kind", "bramble"}, {"elements", elements}};
}

json tangle_to_json(const Tangle& t) {
  json elements = json::array();
  for (const auto& e : t.elements) elements.push_back(vs_to_json(e));
  return json{{"kind", "tangle"}, {"elements", elements}};
}

json separator_to_json(const SeparatorCert& cert) {
  return json{{"kind", "separator"},
              {"x", vs_to_json(cert.x)},
              {"s", vs_to_json(cert.s)},
              {"c", rational_str(cert.c)},
              {"starred", cert.starred}};
}

json model_to_json(const Model& m) {
  json branches = json::array();
  for (const auto& b : m.branches) branches.push_back(vs_to_json(b));
  return json{{"kind", "model"},
              {"pattern", graph_to_json(m.pattern)},
              {"branches", branches}};
}

json bd_to_json(const Graph& g, const BranchDecomposition& bd) {
  json tree_edges = json::array();
  for (auto [x, y] : bd.tree_edges) tree_edges.push_back({x, y});
  json leaves = json::array();
  for (int e = 0; e < static_cast<int>(bd.leaf_of.size()); ++e) {
    auto [u, v] = g.edges()[e];
    leaves.push_back(json{{"edge", {u, v}}, {"leaf", bd.leaf_of[e]}});
  }
  return json{{"kind", "bd"},
              {"nodes", bd.nodes},
              {"tree_edges", tree_edges},
              {"leaves", leaves}};
}

json glm_to_json(const GridLikeMinorCert& cert) {
  json paths = json::array();
  for (const auto& p : cert.paths) paths.push_back(vs_to_json(p));
  json branches = json::array();
  for (const auto& b : cert.kt_branches) branches.push_back(vs_to_json(b));
  return json{{"kind", "glm"},
              {"paths", paths},
              {"side", cert.side},
              {"kt_branches", branches}};
}

json weighted_bramble_to_json(const WeightedBramble& wb) {
  json elements = json::array();
  for (const auto& e : wb.bramble.elements) elements.push_back(vs_to_json(e));
  json weights = json::array();
  for (const auto& w : wb.weights) weights.push_back(rational_str(w));
  return json{
      {"kind", "weighted-bramble"}, {"elements", elements}, {"weights", weights}};
}

VerifyOutcome verify_certificate(const json& doc, const Graph& g) {
  std::string kind = field(doc, "kind").get<std::string>();
  VerifyOutcome out;
  out.kind = kind;

  if (kind == "bramble") {
    Bramble b{vslist_from_json(field(doc, "elements"), "bramble elements")};
    auto check = validate_bramble(g, b);
    out.valid = check.ok;
    if (check.ok) {
      auto [order, hs] = bramble_order(g, b);
      out.detail = "order " + std::to_string(order) + ", hitting set " +
                   hs.vertices.str();
    } else {
      out.detail = check.why;
    }
    return out;
  }
  if (kind == "tangle") {
    Tangle t{vslist_from_json(field(doc, "elements"), "tangle elements")};
    auto check = validate_tangle(g, t);
    out.valid = check.ok;
    out.detail = check.ok ? "tangle condition holds" : check.why;
    return out;
  }
  if (kind == "separator") {
    SeparatorCert cert;
    cert.x = vs_from_json(field(doc, "x"), "separator x");
    cert.s = vs_from_json(field(doc, "s"), "separator s");
    cert.c = parse_rational(field(doc, "c").get<std::string>());
    cert.starred = field(doc, "starred").get<bool>();
    auto check = is_separator(g, cert);
    out.valid = check.ok;
    out.detail = check.ok ? "separator of size " + std::to_string(cert.x.size())
                          : check.why;
    return out;
  }
  if (kind == "model") {
    Model m;
    m.host = g;
    m.pattern = graph_from_json(field(doc, "pattern"));
    m.branches = vslist_from_json(field(doc, "branches"), "model branches");
    auto check = validate_model(m);
    out.valid = check.ok;
    out.detail = check.ok ? "model of a " +
                                std::to_string(m.pattern.vertex_count()) +
                                "-vertex pattern"
                          : check.why;
    return out;
  }
  if (kind == "bd") {
    BranchDecomposition bd;
    bd.nodes = field(doc, "nodes").get<int>();
    for (const auto& e : field(doc, "tree_edges"))
      bd.tree_edges.push_back({e[0].get<int>(), e[1].get<int>()});
    bd.leaf_of.assign(g.edge_count(), -1);
    for (const auto& item : field(doc, "leaves")) {
      auto [u, v] = std::pair{item.at("edge")[0].get<int>(),
                              item.at("edge")[1].get<int>()};
      int idx = g.edge_index(u, v);
      if (idx < 0)
        throw input_error("bd certificate maps a non-edge (" +
                          std::to_string(u) + ", " + std::to_string(v) + ")");
      bd.leaf_of[idx] = item.at("leaf").get<int>();
    }
    auto width = validate_bd(g, bd);
    out.valid = width.ok();
    out.detail = width.ok() ? "width " + std::to_string(*width) : width.error;
    return out;
  }
  if (kind == "glm") {
    GridLikeMinorCert cert;
    cert.paths = vslist_from_json(field(doc, "paths"), "glm paths");
    for (const auto& s : field(doc, "side")) cert.side.push_back(s.get<int>());
    cert.kt_branches =
        vslist_from_json(field(doc, "kt_branches"), "glm branches");
    auto order = validate_glm(g, cert);
    out.valid = order.ok();
    out.detail = order.ok() ? "order " + std::to_string(*order) : order.error;
    return out;
  }
  if (kind == "weighted-bramble") {
    WeightedBramble wb;
    wb.bramble.elements =
        vslist_from_json(field(doc, "elements"), "weighted elements");
    for (const auto& w : field(doc, "weights"))
      wb.weights.push_back(parse_rational(w.get<std::string>()));
    auto bc = validate_bramble(g, wb.bramble);
    if (!bc.ok) {
      out.valid = false;
      out.detail = bc.why;
      return out;
    }
    auto lc = wb.check_load(g);
    out.valid = lc.ok;
    out.detail = lc.ok ? "total weight " + rational_str(wb.total()) : lc.why;
    return out;
  }
  throw input_error("unknown certificate kind '" + kind + "'");
}

}  // namespace twtie
