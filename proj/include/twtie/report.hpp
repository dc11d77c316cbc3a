#pragma once

#include <string>

#include <json.hpp>

#include "twtie/exec.hpp"
#include "twtie/graph.hpp"

namespace twtie {

// Per-oracle instance-size caps. Above a cap the corresponding report value
// is marked "budget-exceeded" and the verdicts that need it are skipped.
// Conservative defaults keep a full report on a desk-scale graph to seconds.
struct Budgets {
  int treewidth = 14;
  int branchwidth_edges = 12;
  int separation = 16;
  int linkedness = 10;
  int well_linked = 9;
  int hadwiger = 10;
  int had_fractional = 6;
};

// Applies "tw=16,bw=14,sep=12,link=10,wl=9,had=10,hadf=6" (any subset) on
// top of base.
Budgets parse_budget_overrides(const std::string& text, Budgets base = {});

// Everything the toolkit can say about one graph: exact parameter values
// (or "budget-exceeded"), inline witness certificates, validity of the tree
// product constructions, and the verdicts of the inequality battery tying
// the parameters together. A verdict is only emitted when both of its sides
// were computed. All verdicts hold on a correct implementation.
struct ParameterReport {
  std::string graph_id;
  nlohmann::json values;         // parameter name -> int | string
  nlohmann::json witnesses;      // name -> certificate document
  nlohmann::json constructions;  // name -> "valid" | "invalid" | skip reason
  struct Verdict {
    std::string name;
    bool holds;
    std::string lhs, rhs;  // exact values as strings
  };
  std::vector<Verdict> verdicts;

  bool all_verdicts_hold() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

ParameterReport parameter_report(const Graph& g, const std::string& graph_id,
                                 const Budgets& budgets = {},
                                 Exec exec = Exec::Parallel);

}  // namespace twtie
