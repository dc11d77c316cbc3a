// Command-line front end: generation, exact parameters, conversions,
// certificate verification, per-graph reports and family sweeps.
//
// Exit codes: 0 success, 1 validation failure, 2 input error, 3 budget
// exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "omp_shim.hpp"
#include "twtie/bramble.hpp"
#include "twtie/branchwidth.hpp"
#include "twtie/cert_json.hpp"
#include "twtie/chordal.hpp"
#include "twtie/errors.hpp"
#include "twtie/families.hpp"
#include "twtie/linkage.hpp"
#include "twtie/minors.hpp"
#include "twtie/pace_io.hpp"
#include "twtie/report.hpp"
#include "twtie/separators.hpp"
#include "twtie/tree_decomposition.hpp"
#include "twtie/treewidth.hpp"

namespace {

using nlohmann::json;
using namespace twtie;

struct Options {
  std::string format = "text";
  std::string budget_spec;
  std::uint64_t seed = 0;
  bool seed_set = false;
  bool serial = false;

  Budgets budgets() const {
    Budgets base;
    if (const char* env = std::getenv("TWTIE_BUDGET"))
      base = parse_budget_overrides(env, base);
    return parse_budget_overrides(budget_spec, base);
  }
  Exec exec() const { return serial ? Exec::Serial : Exec::Parallel; }
  bool json_out() const { return format == "json"; }
};

Graph load_graph(const std::string& path) {
  if (path == "-") return parse_gr(std::cin);
  std::ifstream in(path);
  if (!in) throw input_error("cannot open graph file '" + path + "'");
  return parse_gr(in);
}

TreeDecomposition load_td(const std::string& path) {
  if (path == "-") return parse_td(std::cin);
  std::ifstream in(path);
  if (!in) throw input_error("cannot open decomposition file '" + path + "'");
  return parse_td(in);
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open certificate file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw input_error(std::string("malformed JSON: ") + e.what());
  }
  return doc;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw input_error("cannot write '" + path + "'");
  out << text;
}

Graph generate_with_seed(const Options& opt, const std::string& spec_text) {
  FamilySpec spec = parse_family_spec(spec_text);
  if (opt.seed_set &&
      (spec.kind == FamilyKind::Gnp || spec.kind == FamilyKind::RandomTree) &&
      spec_text.find("seed=") == std::string::npos)
    spec.seed = opt.seed;
  return generate(spec);
}

void emit_value(const Options& opt, const std::string& name, const json& value,
                const json& witness = {}) {
  if (opt.json_out()) {
    json doc{{name, value}};
    if (!witness.is_null()) doc["witness"] = witness;
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << (value.is_string() ? value.get<std::string>() : value.dump())
              << '\n';
    if (!witness.is_null()) std::cout << "witness " << witness.dump() << '\n';
  }
}

// Expands "a..b" ranges inside a family spec, e.g. "grid:2..4,2..4".
std::vector<std::string> expand_sweep(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) return {text};
  std::string kind = text.substr(0, colon);
  std::vector<std::string> args;
  std::istringstream in(text.substr(colon + 1));
  std::string item;
  while (std::getline(in, item, ',')) args.push_back(item);

  std::vector<std::string> specs{kind + ":"};
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string arg = args[i];
    std::string prefix;
    if (arg.rfind("seed=", 0) == 0) {
      prefix = "seed=";
      arg = arg.substr(5);
    }
    std::vector<std::string> choices;
    auto dots = arg.find("..");
    if (dots != std::string::npos && arg.find('/') == std::string::npos) {
      int lo, hi;
      try {
        lo = std::stoi(arg.substr(0, dots));
        hi = std::stoi(arg.substr(dots + 2));
      } catch (const std::exception&) {
        throw input_error("bad range '" + arg + "'");
      }
      if (lo > hi) throw input_error("empty range '" + arg + "'");
      for (int v = lo; v <= hi; ++v) choices.push_back(std::to_string(v));
    } else {
      choices.push_back(arg);
    }
    std::vector<std::string> next;
    for (const auto& base : specs)
      for (const auto& c : choices)
        next.push_back(base + (i ? "," : "") + prefix + c);
    specs = std::move(next);
  }
  return specs;
}

int run(int argc, char** argv) {
  CLI::App app{"exact width parameters and certificates for small graphs"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Options opt;
  app.add_option("--format", opt.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--budget", opt.budget_spec,
                 "per-oracle size caps, e.g. tw=16,sep=12,wl=9");
  app.add_option("--seed", opt.seed, "seed for randomized family kinds")
      ->each([&](const std::string&) { opt.seed_set = true; });
  app.add_flag("--serial", opt.serial, "disable the parallel sweep kernels");

  std::string spec_text, graph_path, out_path, cert_path, mode, td_path;
  std::string c_text = "1/2";
  bool starred = false;

  auto* gen = app.add_subcommand("gen", "generate a family graph (.gr)");
  gen->add_option("spec", spec_text)->required();
  gen->add_option("-o,--output", out_path);

  auto* tw_cmd = app.add_subcommand("tw", "exact treewidth");
  tw_cmd->add_option("graph", graph_path)->required();
  tw_cmd->add_option("--witness", out_path, "write the decomposition (.td)");

  auto* bw_cmd = app.add_subcommand("bw", "exact branchwidth");
  bw_cmd->add_option("graph", graph_path)->required();
  bw_cmd->add_option("--witness", out_path, "write the decomposition (json)");

  auto* link_cmd = app.add_subcommand("link", "linkedness");
  link_cmd->add_option("graph", graph_path)->required();

  auto* wl_cmd = app.add_subcommand("wl", "well-linked number");
  wl_cmd->add_option("graph", graph_path)->required();

  auto* sep_cmd = app.add_subcommand("sep", "separation number");
  sep_cmd->add_option("graph", graph_path)->required();
  sep_cmd->add_option("--c", c_text, "fraction in [1/2, 1), e.g. 1/2 or 2/3");
  sep_cmd->add_flag("--star", starred, "starred variant");

  auto* had_cmd = app.add_subcommand("had", "Hadwiger number");
  had_cmd->add_option("graph", graph_path)->required();
  had_cmd->add_option("--witness", out_path, "write the model (json)");

  auto* convert = app.add_subcommand("convert", "decomposition conversions");
  convert->add_option("mode", mode)
      ->required()
      ->check(CLI::IsMember({"td2bd", "bd2td", "normalize", "chordal"}));
  convert->add_option("graph", graph_path)->required();
  convert->add_option("decomposition", td_path)->required();
  convert->add_option("-o,--output", out_path);

  auto* verify = app.add_subcommand("verify", "check a certificate");
  verify->add_option("certificate", cert_path)->required();
  verify->add_option("graph", graph_path)->required();

  auto* report_cmd = app.add_subcommand("report", "full parameter report");
  report_cmd->add_option("graph", graph_path)->required();

  auto* sweep = app.add_subcommand("sweep", "reports over a family range");
  sweep->add_option("spec", spec_text, "family spec with a..b ranges")
      ->required();

  CLI11_PARSE(app, argc, argv);
  Budgets budgets = opt.budgets();

  if (gen->parsed()) {
    write_output(out_path, emit_gr(generate_with_seed(opt, spec_text)));
    return 0;
  }
  if (tw_cmd->parsed()) {
    Graph g = load_graph(graph_path);
    auto res = exact_treewidth(g, budgets.treewidth);
    emit_value(opt, "tw", res.width);
    if (!out_path.empty())
      write_output(out_path, emit_td(res.td, g.vertex_count()));
    return 0;
  }
  if (bw_cmd->parsed()) {
    Graph g = load_graph(graph_path);
    auto res = exact_branchwidth(g, budgets.branchwidth_edges);
    emit_value(opt, "bw", res.width);
    if (!out_path.empty() && res.bd)
      write_output(out_path, bd_to_json(g, *res.bd).dump(2) + "\n");
    return 0;
  }
  if (link_cmd->parsed()) {
    Graph g = load_graph(graph_path);
    auto res = linkedness(g, budgets.linkedness, opt.exec());
    emit_value(opt, "link", res.k, json(res.witness.vertices()));
    return 0;
  }
  if (wl_cmd->parsed()) {
    Graph g = load_graph(graph_path);
    auto res = well_linked_number(g, budgets.well_linked, opt.exec());
    emit_value(opt, "wl", res.size, json(res.witness.vertices()));
    return 0;
  }
  if (sep_cmd->parsed()) {
    Graph g = load_graph(graph_path);
    auto res = sep_number(g, parse_rational(c_text), starred,
                          budgets.separation, opt.exec());
    emit_value(opt, "sep", res.k, json(res.worst_s.vertices()));
    return 0;
  }
  if (had_cmd->parsed()) {
    Graph g = load_graph(graph_path);
    auto res = hadwiger_number(g, budgets.hadwiger);
    emit_value(opt, "had", res.t);
    if (!out_path.empty())
      write_output(out_path, model_to_json(res.model).dump(2) + "\n");
    return 0;
  }
  if (convert->parsed()) {
    Graph g = load_graph(graph_path);
    if (mode == "td2bd") {
      auto bd = td_to_bd(g, load_td(td_path));
      write_output(out_path, bd_to_json(g, bd).dump(2) + "\n");
    } else if (mode == "bd2td") {
      json doc = load_json(td_path);
      auto outcome = verify_certificate(doc, g);
      if (doc.value("kind", "") != "bd" || !outcome.valid)
        throw input_error("bd2td needs a valid 'bd' certificate: " +
                          outcome.detail);
      BranchDecomposition bd;
      bd.nodes = doc.at("nodes").get<int>();
      for (const auto& e : doc.at("tree_edges"))
        bd.tree_edges.push_back({e[0].get<int>(), e[1].get<int>()});
      bd.leaf_of.assign(g.edge_count(), -1);
      for (const auto& item : doc.at("leaves"))
        bd.leaf_of[g.edge_index(item.at("edge")[0].get<int>(),
                                item.at("edge")[1].get<int>())] =
            item.at("leaf").get<int>();
      write_output(out_path, emit_td(bd_to_td(g, bd), g.vertex_count()));
    } else if (mode == "normalize") {
      write_output(out_path, emit_td(normalize_td(g, load_td(td_path)),
                                     g.vertex_count()));
    } else {  // chordal
      write_output(out_path, emit_gr(chordal_completion(g, load_td(td_path))));
    }
    return 0;
  }
  if (verify->parsed()) {
    Graph g = load_graph(graph_path);
    VerifyOutcome outcome;
    if (cert_path.size() > 3 &&
        cert_path.substr(cert_path.size() - 3) == ".td") {
      auto td = load_td(cert_path);
      auto width = validate_td(g, td);
      outcome = {width.ok(), "td",
                 width.ok() ? "width " + std::to_string(*width) : width.error};
    } else {
      outcome = verify_certificate(load_json(cert_path), g);
    }
    if (opt.json_out())
      std::cout << json{{"kind", outcome.kind},
                        {"valid", outcome.valid},
                        {"detail", outcome.detail}}
                       .dump(2)
                << '\n';
    else
      std::cout << (outcome.valid ? "valid " : "invalid ") << outcome.kind
                << ": " << outcome.detail << '\n';
    return outcome.valid ? 0 : 1;
  }
  if (report_cmd->parsed()) {
    Graph g = load_graph(graph_path);
    auto rep = parameter_report(g, graph_path, budgets, opt.exec());
    if (opt.json_out())
      std::cout << rep.to_json().dump(2) << '\n';
    else
      std::cout << rep.to_text();
    return rep.all_verdicts_hold() ? 0 : 1;
  }
  if (sweep->parsed()) {
    auto specs = expand_sweep(spec_text);
    std::vector<ParameterReport> reports(specs.size());
    std::vector<std::string> errors(specs.size());
    // Reports are independent; run them concurrently, merge in input order.
#pragma omp parallel for schedule(dynamic) if (!opt.serial)
    for (long long i = 0; i < static_cast<long long>(specs.size()); ++i) {
      try {
        Graph g = generate_with_seed(opt, specs[i]);
        reports[i] = parameter_report(g, specs[i], budgets, Exec::Serial);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
    bool all_hold = true;
    json arr = json::array();
    Rational max_wl_ratio(0), max_had_ratio(0);
    for (std::size_t i = 0; i < specs.size(); ++i) {
      if (!errors[i].empty()) throw input_error(errors[i]);
      const auto& rep = reports[i];
      all_hold = all_hold && rep.all_verdicts_hold();
      if (opt.json_out()) {
        arr.push_back(rep.to_json());
      } else {
        std::ostringstream line;
        line << rep.graph_id << ": ";
        for (auto it = rep.values.begin(); it != rep.values.end(); ++it)
          if (it.key() != "n" && it.key() != "m")
            line << it.key() << '='
                 << (it.value().is_string() ? it.value().get<std::string>()
                                            : it.value().dump())
                 << ' ';
        line << (rep.all_verdicts_hold() ? "[verdicts ok]" : "[VERDICTS FAIL]");
        std::cout << line.str() << '\n';
      }
      // Observed tightness ratios for the open bounds.
      if (rep.values.contains("wl") && rep.values["wl"].is_number() &&
          rep.values.contains("link") && rep.values["link"].is_number()) {
        Rational ratio(rep.values["wl"].get<int>(),
                       rep.values["link"].get<int>());
        max_wl_ratio = std::max(max_wl_ratio, ratio);
      }
      if (rep.values.contains("had_r3") && rep.values["had_r3"].is_string() &&
          rep.values["had_r3"] != "budget-exceeded" &&
          rep.values.contains("had_r2") && rep.values["had_r2"].is_string() &&
          rep.values["had_r2"] != "budget-exceeded") {
        Rational r3 = parse_rational(rep.values["had_r3"].get<std::string>());
        Rational r2 = parse_rational(rep.values["had_r2"].get<std::string>());
        if (r2 > 0) max_had_ratio = std::max(max_had_ratio, Rational(r3 / r2));
      }
    }
    if (opt.json_out()) {
      std::cout << json{{"reports", arr},
                        {"max_wl_over_link", rational_str(max_wl_ratio)},
                        {"max_had3_over_had2", rational_str(max_had_ratio)}}
                       .dump(2)
                << '\n';
    } else {
      std::cout << "max wl/link ratio observed: " << rational_str(max_wl_ratio)
                << "\nmax had_3/had_2 ratio observed: "
                << rational_str(max_had_ratio) << '\n';
    }
    return all_hold ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 3;
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
