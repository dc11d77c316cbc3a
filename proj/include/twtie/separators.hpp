#pragma once

#include <vector>

#include "twtie/check.hpp"
#include "twtie/exec.hpp"
#include "twtie/graph.hpp"
#include "twtie/rational.hpp"
#include "twtie/tree_decomposition.hpp"
#include "twtie/vertex_set.hpp"

namespace twtie {

// Certificate that x splits s in proportion c, for c in [1/2, 1).
// Standard: no component of g - x contains more than c * |s - x| vertices
// of s. Starred variant: no component contains more than c * |s| vertices
// of s - x. Both sides of each comparison are evaluated in exact rational
// arithmetic; the constructive results below hinge on integrality.
struct SeparatorCert {
  VertexSet x;
  VertexSet s;
  Rational c;
  bool starred = false;
};

// Evaluates the certificate; on failure names a violating component.
// Throws input_error when c is outside [1/2, 1) or vertices are bad.
Check is_separator(const Graph& g, const SeparatorCert& cert);

struct SepNumberResult {
  int k = 0;
  // First set (in mask order) with no separator below size k.
  VertexSet worst_s;
};

// Exact separation number: the smallest k such that every S has a valid X
// with |X| <= k. Sweeps all 2^n sets S; for each S, previously successful
// separators are tried first (a witness found for one S usually covers many
// others), and only on a miss is the minimum |X| recomputed by exhaustive
// search in increasing size. The result is the max over S of that minimum,
// independent of sweep order, so the parallel and serial paths agree.
// Throws budget_error when n > max_n.
SepNumberResult sep_number(const Graph& g, const Rational& c, bool starred,
                           int max_n = 16, Exec exec = Exec::Parallel);

constexpr int kDefaultSeparationBudget = 16;

// Constructs X with |X| <= width(td)+1 such that (X, s, 1/2) is a valid
// standard separator. Normalizes td internally when needed; then either some
// tree edge's intersection bag already separates, or every tree edge has
// exactly one large side, in which case orienting each edge toward its large
// side yields a sink whose bag works. Failure of the final bag would
// contradict integrality, so it throws internal_error.
VertexSet separator_from_td(const Graph& g, const VertexSet& s,
                            const TreeDecomposition& td);

// Groups the components of g - x into at most max_parts parts (2 or 3) such
// that no part carries more than 2/3 resp. 1/2 of the vertices of s - x.
// Preconditions: with max_parts = 3 no single component may exceed 1/2 of
// s - x; with max_parts = 2 none may exceed 2/3. Violation is an input_error
// naming the heavy component. First-fit-decreasing merging meets the bound.
std::vector<std::vector<VertexSet>> partition_components(const Graph& g,
                                                         const VertexSet& x,
                                                         const VertexSet& s,
                                                         int max_parts);

}  // namespace twtie
