#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "extshift/linear_map.hpp"
#include "extshift/monomial_order.hpp"
#include "extshift/multivector.hpp"
#include "extshift/set_family.hpp"
#include "extshift/subspace.hpp"

namespace extshift {

/// Seeded source for randomized checks. Rationals have numerators in [-9, 9]
/// and denominators in [1, 9].
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  int uniform_int(int lo, int hi);
  Scalar rational();
  Scalar nonzero_rational();

  /// Homogeneous grade-k element with each monomial present with probability `density`.
  Multivector multivector(int n, int k, double density = 0.5);
  /// Invertible upper-triangular map.
  LinearMap upper_triangular(int n);
  /// Invertible map with no structural zeros.
  LinearMap invertible(int n);
  /// Span of m random grade-k elements (dimension may fall below m).
  Subspace subspace(const MonomialOrder& order, int m);
  /// Random member of a family list.
  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(uniform_int(0, static_cast<int>(items.size()) - 1))];
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace extshift
