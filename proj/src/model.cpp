#include "twtie/model.hpp"

#include "twtie/errors.hpp"

namespace twtie {

Check validate_model(const Model& m) {
  if (static_cast<int>(m.branches.size()) != m.pattern.vertex_count())
    return Check::fail("model has " + std::to_string(m.branches.size()) +
                       " branches for " +
                       std::to_string(m.pattern.vertex_count()) +
                       " pattern vertices");
  for (std::size_t i = 0; i < m.branches.size(); ++i) {
    m.branches[i].check_range(m.host.vertex_count(), "model branch");
    if (!is_connected_subset(m.host, m.branches[i]))
      return Check::fail("branch " + std::to_string(i) +
                         " is empty or not connected in the host");
  }
  for (std::size_t i = 0; i < m.branches.size(); ++i)
    for (std::size_t j = i + 1; j < m.branches.size(); ++j)
      if (m.branches[i].intersects(m.branches[j]))
        return Check::fail("branches " + std::to_string(i) + " and " +
                           std::to_string(j) + " share a host vertex");
  for (auto [u, v] : m.pattern.edges()) {
    bool joined = false;
    for (int x : m.branches[u]) {
      for (int y : m.host.neighbors(x))
        if (m.branches[v].contains(y)) {
          joined = true;
          break;
        }
      if (joined) break;
    }
    if (!joined)
      return Check::fail("pattern edge (" + std::to_string(u) + ", " +
                         std::to_string(v) +
                         ") has no host edge between its branches");
  }
  return Check::pass();
}

}  // namespace twtie
