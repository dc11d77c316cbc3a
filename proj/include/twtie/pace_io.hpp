#pragma once

#include <iosfwd>
#include <string>

#include "twtie/graph.hpp"
#include "twtie/tree_decomposition.hpp"

namespace twtie {

// PACE-style graph format: optional 'c' comment lines, a header
// "p tw <n> <m>", then one "<u> <v>" line per edge with 1-based vertices.
// Parsing reports malformed input with the offending line number; emitting
// is canonical (edges sorted, no comments), so emit(parse(emit(x))) is
// byte-stable.
Graph parse_gr(std::istream& in);
std::string emit_gr(const Graph& g);

// PACE-style tree decomposition format: optional comments, a header
// "s td <#bags> <max bag size> <n>", bag lines "b <id> <v...>", then tree
// edges as "<i> <j>" over 1-based bag ids.
TreeDecomposition parse_td(std::istream& in);
std::string emit_td(const TreeDecomposition& td, int n);

}  // namespace twtie
