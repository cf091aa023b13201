#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "extshift/linalg.hpp"
#include "extshift/monomial_order.hpp"
#include "extshift/subspace.hpp"

namespace extshift {

/// Projective Plücker vector of an m-dimensional subspace of the grade-k part.
///
/// A coordinate is indexed by an increasing list of m positions in the
/// CoordinateFrame of `order` and holds the corresponding maximal minor.
/// Only nonzero coordinates are stored, and the vector is scaled so that the
/// first stored coordinate (lexicographic in positions) equals 1.
struct PlueckerVector {
  using Key = std::vector<std::size_t>;

  MonomialOrder order;
  std::size_t m = 0;
  std::map<Key, Scalar> coordinates;

  /// Monomials named by a coordinate key.
  std::vector<IndexSet> monomials(const Key& key) const;
  /// Order-earliest m-subset with nonzero coordinate.
  const Key& leading_key() const { return coordinates.begin()->first; }
  std::string to_string() const;

  friend bool operator==(const PlueckerVector&, const PlueckerVector&) = default;
};

/// Scales a raw coordinate map so its first entry is 1. Throws on an all-zero map.
PlueckerVector normalized_pluecker(const MonomialOrder& order, std::size_t m,
                                   std::map<PlueckerVector::Key, Scalar> raw);

/// Maximal minors of an m × N coordinate matrix of full row rank.
PlueckerVector pluecker_of_rows(const MonomialOrder& order, const Matrix& rows);

/// Plücker vector of V; V must be nonzero.
PlueckerVector pluecker(const Subspace& v);

/// Calls visit(cols) for every increasing m-subset of `pool`.
template <typename Visit>
void for_each_combination(const std::vector<std::size_t>& pool, std::size_t m, Visit&& visit) {
  if (m > pool.size()) return;
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  std::vector<std::size_t> cols(m);
  while (true) {
    for (std::size_t i = 0; i < m; ++i) cols[i] = pool[idx[i]];
    visit(cols);
    std::size_t r = m;
    while (r > 0 && idx[r - 1] == pool.size() - m + r - 1) --r;
    if (r == 0) return;
    ++idx[r - 1];
    for (std::size_t s = r; s < m; ++s) idx[s] = idx[s - 1] + 1;
  }
}

}  // namespace extshift
