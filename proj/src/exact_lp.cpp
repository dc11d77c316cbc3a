#include "twtie/exact_lp.hpp"

#include "twtie/errors.hpp"

namespace twtie {

LpSolution simplex_max(const std::vector<Rational>& c,
                       const std::vector<std::vector<Rational>>& a,
                       const std::vector<Rational>& b) {
  std::size_t m = a.size(), nv = c.size();
  if (b.size() != m) throw input_error("simplex_max: rhs size mismatch");
  for (const auto& row : a)
    if (row.size() != nv) throw input_error("simplex_max: row size mismatch");
  for (const auto& bi : b)
    if (bi < 0) throw input_error("simplex_max: negative rhs");

  // Tableau with slack columns; the slack basis is feasible since b >= 0.
  std::size_t cols = nv + m;
  std::vector<std::vector<Rational>> tab(m, std::vector<Rational>(cols + 1));
  std::vector<Rational> cost(cols + 1);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < nv; ++j) tab[i][j] = a[i][j];
    tab[i][nv + i] = 1;
    tab[i][cols] = b[i];
    basis[i] = nv + i;
  }
  for (std::size_t j = 0; j < nv; ++j) cost[j] = c[j];

  while (true) {
    // Bland's rule: the lowest-index improving column enters, and ties on
    // the ratio test break toward the lowest basis index, so no cycling.
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (cost[j] > 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;

    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (tab[i][enter] <= 0) continue;
      Rational ratio = tab[i][cols] / tab[i][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) throw internal_error("simplex_max: unbounded program");

    Rational pivot = tab[leave][enter];
    for (auto& x : tab[leave]) x /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || tab[i][enter] == 0) continue;
      Rational f = tab[i][enter];
      for (std::size_t j = 0; j <= cols; ++j)
        tab[i][j] -= f * tab[leave][j];
    }
    Rational f = cost[enter];
    if (f != 0)
      for (std::size_t j = 0; j <= cols; ++j)
        cost[j] -= f * tab[leave][j];
    basis[leave] = enter;
  }

  LpSolution sol;
  sol.optimum = -cost[cols];
  sol.x.assign(nv, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < nv) sol.x[basis[i]] = tab[i][cols];
  return sol;
}

}  // namespace twtie
