#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace extshift {

/// Largest supported ground dimension; subsets of [n] are stored as 64-bit masks.
inline constexpr int kMaxDimension = 64;

/// A subset of [n] = {1,...,n}; index i is stored in bit i-1.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}
  IndexSet(std::initializer_list<int> indices);
  static IndexSet from_indices(const std::vector<int>& indices);
  /// {1,...,n}
  static IndexSet full(int n);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int i) const { return (bits_ >> (i - 1)) & 1u; }
  /// Largest index present, 0 if empty.
  constexpr int max() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }
  constexpr int min() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

  IndexSet with(int i) const { return IndexSet(bits_ | bit(i)); }
  IndexSet without(int i) const { return IndexSet(bits_ & ~bit(i)); }
  /// Number of elements strictly smaller than i.
  int count_below(int i) const { return std::popcount(bits_ & (bit(i) - 1)); }

  constexpr bool intersects(IndexSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr IndexSet operator|(IndexSet o) const { return IndexSet(bits_ | o.bits_); }
  constexpr IndexSet operator&(IndexSet o) const { return IndexSet(bits_ & o.bits_); }
  /// Complement within [n].
  IndexSet complement(int n) const { return IndexSet(full(n).bits_ & ~bits_); }

  /// Ascending list of indices.
  std::vector<int> indices() const;
  /// "{1,3,4}"
  std::string to_string() const;

  friend constexpr bool operator==(IndexSet a, IndexSet b) = default;

  static constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << (i - 1); }

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on sorted index sequences; a proper prefix comes first.
bool lex_less(IndexSet a, IndexSet b);

struct LexLess {
  bool operator()(IndexSet a, IndexSet b) const { return lex_less(a, b); }
};

/// Order by Σ_{i∈S} 2^i (colexicographic).
inline bool weight_less(IndexSet a, IndexSet b) { return a.bits() < b.bits(); }

/// All k-subsets of [n] in lexicographic order.
std::vector<IndexSet> k_subsets(int n, int k);

std::uint64_t binomial(int n, int k);

}  // namespace extshift
