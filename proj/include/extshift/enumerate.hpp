#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "extshift/set_family.hpp"

namespace extshift {

enum class EnumerationMode {
  all_intersecting,      ///< independent sets of the Kneser graph
  shifted_intersecting,  ///< intersecting down-sets of the shift order
  maximal_intersecting,  ///< intersecting families no k-set can be added to
};

std::string to_string(EnumerationMode mode);
EnumerationMode parse_enumeration_mode(std::string_view text);

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Visits every family of the requested kind exactly once, in lexicographic
/// order of their member lists (each list itself sorted lexicographically).
/// Throws BudgetExceeded once more than `budget` search nodes are visited.
/// Returns the number of families visited.
std::uint64_t enumerate_families(int n, int k, EnumerationMode mode,
                                 const std::function<void(const SetFamily&)>& visit,
                                 std::uint64_t budget = kDefaultBudget);

std::vector<SetFamily> collect_families(int n, int k, EnumerationMode mode,
                                        std::uint64_t budget = kDefaultBudget);

}  // namespace extshift
