#include "extshift/set_family.hpp"

#include <algorithm>
#include <stdexcept>

namespace extshift {

namespace {

void check_parameters(int n, int k) {
  if (n < 1 || n > kMaxDimension || k < 0 || k > n) {
    throw std::invalid_argument("set family needs 0 <= k <= n and 1 <= n <= 64 (got n=" +
                                std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
}

}  // namespace

SetFamily::SetFamily(int n, int k) : n_(n), k_(k) { check_parameters(n, k); }

SetFamily::SetFamily(int n, int k, std::vector<IndexSet> sets) : n_(n), k_(k), sets_(std::move(sets)) {
  check_parameters(n, k);
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    const IndexSet s = sets_[i];
    if (s.size() != k) {
      throw std::invalid_argument("set #" + std::to_string(i + 1) + " " + s.to_string() +
                                  " does not have size " + std::to_string(k));
    }
    if (s.max() > n) {
      throw std::invalid_argument("set #" + std::to_string(i + 1) + " " + s.to_string() +
                                  " is not a subset of [" + std::to_string(n) + "]");
    }
  }
  std::sort(sets_.begin(), sets_.end(), LexLess{});
  auto dup = std::adjacent_find(sets_.begin(), sets_.end());
  if (dup != sets_.end()) throw std::invalid_argument("duplicate set " + dup->to_string());
}

bool SetFamily::contains(IndexSet s) const {
  return std::binary_search(sets_.begin(), sets_.end(), s, LexLess{});
}

std::string SetFamily::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (i) out += ',';
    out += sets_[i].to_string();
  }
  return out + "}";
}

bool is_intersecting(const SetFamily& f) {
  const auto& s = f.sets();
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a; b < s.size(); ++b)
      if (!s[a].intersects(s[b])) return false;
  return true;
}

bool is_shifted(const SetFamily& f) {
  for (IndexSet s : f.sets()) {
    for (int i : s.indices()) {
      for (int j = 1; j < i; ++j) {
        if (s.contains(j)) continue;
        if (!f.contains(s.without(i).with(j))) return false;
      }
    }
  }
  return true;
}

}  // namespace extshift
