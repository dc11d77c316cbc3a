#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace twtie {

// An ordered, duplicate-free set of vertex identifiers. Kept sorted
// ascending, which is also the canonical serialization order.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<int> vs);
  explicit VertexSet(std::vector<int> vs);  // sorts and deduplicates

  static VertexSet full(int n);  // {0, 1, ..., n-1}
  static VertexSet from_mask(std::uint64_t mask);

  int size() const { return static_cast<int>(v_.size()); }
  bool empty() const { return v_.empty(); }
  bool contains(int x) const;
  int min() const;  // requires non-empty

  void insert(int x);
  void erase(int x);

  VertexSet set_union(const VertexSet& o) const;
  VertexSet set_minus(const VertexSet& o) const;
  VertexSet set_intersect(const VertexSet& o) const;
  bool intersects(const VertexSet& o) const;
  bool subset_of(const VertexSet& o) const;

  // Throws input_error if any member is outside [0, n).
  void check_range(int n, const char* what) const;

  // Bit representation; requires all members < 64.
  std::uint64_t mask() const;

  const std::vector<int>& vertices() const { return v_; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  bool operator==(const VertexSet&) const = default;
  // Lexicographic on the sorted vertex sequence.
  bool operator<(const VertexSet& o) const { return v_ < o.v_; }

  std::string str() const;  // "{0, 3, 5}"

 private:
  std::vector<int> v_;
};

}  // namespace twtie
