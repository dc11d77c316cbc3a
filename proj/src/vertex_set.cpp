#include "twtie/vertex_set.hpp"

#include <algorithm>
#include <sstream>

#include "twtie/errors.hpp"

namespace twtie {

VertexSet::VertexSet(std::initializer_list<int> vs)
    : VertexSet(std::vector<int>(vs)) {}

VertexSet::VertexSet(std::vector<int> vs) : v_(std::move(vs)) {
  std::sort(v_.begin(), v_.end());
  v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
}

VertexSet VertexSet::full(int n) {
  std::vector<int> vs(n);
  for (int i = 0; i < n; ++i) vs[i] = i;
  VertexSet s;
  s.v_ = std::move(vs);
  return s;
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
  VertexSet s;
  for (int i = 0; i < 64; ++i)
    if (mask >> i & 1) s.v_.push_back(i);
  return s;
}

bool VertexSet::contains(int x) const {
  return std::binary_search(v_.begin(), v_.end(), x);
}

int VertexSet::min() const { return v_.front(); }

void VertexSet::insert(int x) {
  auto it = std::lower_bound(v_.begin(), v_.end(), x);
  if (it == v_.end() || *it != x) v_.insert(it, x);
}

void VertexSet::erase(int x) {
  auto it = std::lower_bound(v_.begin(), v_.end(), x);
  if (it != v_.end() && *it == x) v_.erase(it);
}

VertexSet VertexSet::set_union(const VertexSet& o) const {
  VertexSet r;
  std::set_union(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(),
                 std::back_inserter(r.v_));
  return r;
}

VertexSet VertexSet::set_minus(const VertexSet& o) const {
  VertexSet r;
  std::set_difference(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(),
                      std::back_inserter(r.v_));
  return r;
}

VertexSet VertexSet::set_intersect(const VertexSet& o) const {
  VertexSet r;
  std::set_intersection(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(),
                        std::back_inserter(r.v_));
  return r;
}

bool VertexSet::intersects(const VertexSet& o) const {
  auto i = v_.begin();
  auto j = o.v_.begin();
  while (i != v_.end() && j != o.v_.end()) {
    if (*i == *j) return true;
    if (*i < *j)
      ++i;
    else
      ++j;
  }
  return false;
}

bool VertexSet::subset_of(const VertexSet& o) const {
  return std::includes(o.v_.begin(), o.v_.end(), v_.begin(), v_.end());
}

void VertexSet::check_range(int n, const char* what) const {
  for (int x : v_)
    if (x < 0 || x >= n)
      throw input_error(std::string(what) + ": vertex " + std::to_string(x) +
                        " out of range [0, " + std::to_string(n) + ")");
}

std::uint64_t VertexSet::mask() const {
  std::uint64_t m = 0;
  for (int x : v_) {
    if (x < 0 || x >= 64) throw input_error("vertex too large for bitmask");
    m |= std::uint64_t{1} << x;
  }
  return m;
}

std::string VertexSet::str() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (i) out << ", ";
    out << v_[i];
  }
  out << '}';
  return out.str();
}

}  // namespace twtie
