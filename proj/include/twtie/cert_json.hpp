#pragma once

#include <string>

#include <json.hpp>

#include "twtie/bramble.hpp"
#include "twtie/branch_decomposition.hpp"
#include "twtie/check.hpp"
#include "twtie/minors.hpp"
#include "twtie/model.hpp"
#include "twtie/separators.hpp"
#include "twtie/tangle.hpp"

namespace twtie {

// Certificate interchange: one JSON document with a "kind" discriminator in
// {bramble, tangle, separator, model, bd, glm, weighted-bramble}. Vertex
// lists are sorted, fractions are exact strings ("1/2"), and object keys
// serialize sorted, so emitted documents are diff-friendly.

nlohmann::json bramble_to_json(const Bramble& b);
nlohmann::json tangle_to_json(const Tangle& t);
nlohmann::json separator_to_json(const SeparatorCert& cert);
nlohmann::json model_to_json(const Model& m);
nlohmann::json bd_to_json(const Graph& g, const BranchDecomposition& bd);
nlohmann::json glm_to_json(const GridLikeMinorCert& cert);
nlohmann::json weighted_bramble_to_json(const WeightedBramble& wb);

struct VerifyOutcome {
  bool valid = false;
  std::string kind;
  std::string detail;  // witness on failure, summary (order/width) on success
};

// Parses a certificate document and verifies it against g. Structural
// problems (unknown kind, missing fields, bad indices) throw input_error;
// a well-formed certificate that fails its invariants yields valid = false.
VerifyOutcome verify_certificate(const nlohmann::json& doc, const Graph& g);

}  // namespace twtie
