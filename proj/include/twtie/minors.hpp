#pragma once

#include <optional>
#include <vector>

#include "twtie/bramble.hpp"
#include "twtie/check.hpp"
#include "twtie/graph.hpp"
#include "twtie/model.hpp"
#include "twtie/rational.hpp"

namespace twtie {

struct HadwigerResult {
  int t = 0;
  Model model;
};

// Order of the largest complete minor, with a validating witness model.
// Searches for K_t models with t increasing from the clique number: branch
// sets are chosen one at a time in ascending order of their minimum vertex,
// each a connected set of unused vertices adjacent to all previous branch
// sets. Deterministic. Throws budget_error when n > max_n.
HadwigerResult hadwiger_number(const Graph& g, int max_n = 10);

constexpr int kDefaultHadwigerBudget = 10;

// A set of paths in the host whose intersection graph (paths adjacent iff
// they share a host vertex) is bipartite under the given sides and contains
// a complete minor of order t, witnessed by kt_model over path indices.
struct GridLikeMinorCert {
  std::vector<VertexSet> paths;
  std::vector<int> side;  // 0 or 1 per path
  std::vector<VertexSet> kt_branches;
};

// Checks path-ness of each element, bipartiteness of the intersection graph
// under the given sides, and the K_t model in the intersection graph;
// returns the order t >= 1 (an empty model is rejected as degenerate).
Result<int> validate_glm(const Graph& g, const GridLikeMinorCert& cert);

// The k x k grid with its canonical grid-like minor of order k+1: paths are
// the k rows and k columns, the intersection graph is K_{k,k}, and the
// K_{k+1} model pairs row i with column i for i < k-1 plus the last row and
// last column as singleton branches.
std::pair<Graph, GridLikeMinorCert> glm_from_grid(int k);

// Lifts a grid-like minor of order t to a K_t model in g x K_2: each path
// moves to the copy given by its side, and each branch of the intersection
// model becomes the union of its lifted paths. Throws input_error when the
// certificate is invalid.
Model model_in_product_from_glm(const Graph& g, const GridLikeMinorCert& cert);

// A bramble with non-negative rational weights; the weights of the elements
// containing any one vertex must sum to at most 1. In r-integral mode every
// weight is a multiple of 1/r.
struct WeightedBramble {
  Bramble bramble;
  std::vector<Rational> weights;

  Rational total() const;
  Check check_load(const Graph& g) const;
  Check check_r_integral(int r) const;
};

// Projects the branches of a K_t model in g x K_2 onto the first copy.
// Projections are connected and pairwise touch, every vertex lies in at most
// two of them, and each receives weight floor(r/2)/r, so the load bound
// holds and the total weight is t*floor(r/2)/r >= t/3 (= t/2 for even r).
// Throws input_error when m is not a valid K_t model in cartesian_with_k2(g)
// or r < 2.
WeightedBramble weighted_bramble_from_product_model(const Graph& g,
                                                    const Model& m, int r);

// Optimum of max sum w(X) subject to per-vertex load <= 1, w >= 0, solved by
// the exact rational simplex. Throws input_error when b is invalid.
Rational fractional_order(const Graph& g, const Bramble& b);

// Exact fractional Hadwiger number (r absent), or its r-integral variant:
// enumerates the maximal pairwise-touching families of connected vertex sets
// (supersets only improve the program), solves each family's weight program
// — the LP, or for r-integral mode an exact branch and bound over
// multiplicities of 1/r — and returns the best value.
// Throws budget_error when n > max_n.
Rational had_f_small(const Graph& g, std::optional<int> r, int max_n = 6);

constexpr int kDefaultHadFractionalBudget = 6;

}  // namespace twtie
