#pragma once

#include <string>
#include <vector>

#include "extshift/index_set.hpp"

namespace extshift {

/// A family of k-subsets of [n], kept sorted lexicographically without
/// duplicates. k = 0 is allowed so that links of 1-uniform families exist.
class SetFamily {
 public:
  SetFamily(int n, int k);
  /// Validates uniformity, range and distinctness; sorts the sets.
  SetFamily(int n, int k, std::vector<IndexSet> sets);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<IndexSet>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  bool contains(IndexSet s) const;

  /// "{{1,2},{1,3}}"
  std::string to_string() const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  int n_;
  int k_;
  std::vector<IndexSet> sets_;
};

/// Every pair of members (including a member with itself) meets.
bool is_intersecting(const SetFamily& f);

/// Literal shiftedness: i > j, i ∈ S, j ∉ S, S ∈ F ⇒ (S∖i)∪j ∈ F.
bool is_shifted(const SetFamily& f);

}  // namespace extshift
