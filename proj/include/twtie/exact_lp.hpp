#pragma once

#include <vector>

#include "twtie/rational.hpp"

namespace twtie {

struct LpSolution {
  Rational optimum;
  std::vector<Rational> x;
};

// Maximizes c^T x subject to A x <= b, x >= 0, for b >= 0 (the slack basis
// is then feasible, so no phase-1 is needed). Dense tableau simplex in exact
// rational arithmetic with Bland's rule, so it terminates and is
// deterministic. Intended for the small certificate programs here, not as a
// general-purpose solver. Throws input_error on shape mismatch or negative
// entries of b, internal_error if the program is unbounded.
LpSolution simplex_max(const std::vector<Rational>& c,
                       const std::vector<std::vector<Rational>>& a,
                       const std::vector<Rational>& b);

}  // namespace twtie
