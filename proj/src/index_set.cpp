#include "extshift/index_set.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace extshift {

IndexSet::IndexSet(std::initializer_list<int> indices)
    : IndexSet(from_indices(std::vector<int>(indices))) {}

IndexSet IndexSet::from_indices(const std::vector<int>& indices) {
  std::uint64_t bits = 0;
  for (int i : indices) {
    if (i < 1 || i > kMaxDimension) {
      throw std::invalid_argument("index " + std::to_string(i) + " out of range");
    }
    if (bits & bit(i)) {
      throw std::invalid_argument("repeated index " + std::to_string(i));
    }
    bits |= bit(i);
  }
  return IndexSet(bits);
}

IndexSet IndexSet::full(int n) {
  if (n >= 64) return IndexSet(~std::uint64_t{0});
  return IndexSet((std::uint64_t{1} << n) - 1);
}

std::vector<int> IndexSet::indices() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

std::string IndexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int i : indices()) {
    if (!first) s += ',';
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

bool lex_less(IndexSet a, IndexSet b) {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  // Both sequences agree on every element below the lowest differing index p.
  const std::uint64_t low = diff & (~diff + 1);
  const std::uint64_t above = ~(low | (low - 1));
  if (a.bits() & low) {
    // a continues with p; b continues with something larger, or ends.
    return (b.bits() & above) != 0;
  }
  return (a.bits() & above) == 0;
}

std::vector<IndexSet> k_subsets(int n, int k) {
  std::vector<IndexSet> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  for (int r = 0; r < k; ++r) idx[r] = r + 1;
  while (true) {
    out.push_back(IndexSet::from_indices(idx));
    int r = k - 1;
    while (r >= 0 && idx[r] == n - k + r + 1) --r;
    if (r < 0) break;
    ++idx[r];
    for (int s = r + 1; s < k; ++s) idx[s] = idx[s - 1] + 1;
  }
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  // Divide before multiplying so r·(n-k+i) cannot overflow when the result fits.
  for (int i = 1; i <= k; ++i) {
    const std::uint64_t g = std::gcd(r, static_cast<std::uint64_t>(i));
    r = (r / g) * (static_cast<std::uint64_t>(n - k + i) / (static_cast<std::uint64_t>(i) / g));
  }
  return r;
}

}  // namespace extshift
