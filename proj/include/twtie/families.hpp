#pragma once

#include <cstdint>
#include <string>

#include "twtie/graph.hpp"
#include "twtie/rational.hpp"

namespace twtie {

enum class FamilyKind {
  Psi,
  Grid,
  Complete,
  CompleteBipartite,
  KnMinusMatching,
  Path,
  RandomTree,
  Gnp,
};

// A deterministic recipe for a test-corpus graph. Textual form understood by
// the CLI: "psi:4,2", "grid:3,3", "complete:5", "complete_bipartite:6,3",
// "kn_minus_matching:4", "path:4", "random_tree:8,seed=1",
// "gnp:10,1/3,seed=7".
struct FamilySpec {
  FamilyKind kind;
  int a = 0;
  int b = 0;
  Rational p;  // gnp edge probability, exact
  std::uint64_t seed = 0;

  std::string str() const;
};

FamilySpec parse_family_spec(const std::string& text);

// The clique-plus-independent-set graph: A = {0..n-1} is a clique, B =
// {n..n+kn-1} is independent, vertex a of A is paired with the block
// n+a*k..n+a*k+k-1 and adjacent to every other vertex of B. Hence every A
// vertex has k(n-1) neighbors in B and every B vertex has degree n-1. The
// consecutive-block pairing is the canonical one; any disjoint pairing gives
// an isomorphic graph.
Graph psi(int n, int k);

// r x c grid with row-major vertex numbering.
Graph grid(int rows, int cols);

Graph complete(int n);
Graph complete_bipartite(int a, int b);

// K_{n,n} with the perfect matching (i, n+i) removed; (n-1)-regular.
Graph kn_minus_matching(int n);

Graph path_graph(int n);

// Randomized kinds are reproducible: both use the standard mt19937 engine
// seeded directly, consuming one 32-bit draw per decision, so identical
// spec+seed yields an identical graph on every platform.
// random_tree decodes a uniform random Pruefer sequence.
Graph random_tree(int n, std::uint64_t seed);

// G(n, p): pairs (i, j), i < j, in lexicographic order; the edge is present
// iff draw % denominator(p) < numerator(p).
Graph gnp(int n, const Rational& p, std::uint64_t seed);

Graph generate(const FamilySpec& spec);

}  // namespace twtie
