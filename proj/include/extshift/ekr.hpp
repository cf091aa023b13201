#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "extshift/limits.hpp"
#include "extshift/set_family.hpp"
#include "extshift/subspace.hpp"

namespace extshift {

/// A verifier was handed input outside its contract.
class PreconditionError : public std::invalid_argument {
 public:
  enum class Reason { not_shifted, not_intersecting, k_too_large, not_self_annihilating, bad_parameters };

  PreconditionError(Reason reason, const std::string& what)
      : std::invalid_argument(what), reason_(reason) {}
  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

struct Decomposition {
  SetFamily star;  ///< members containing v
  SetFamily del;   ///< members avoiding v
  SetFamily link;  ///< star members with v removed; grade k-1, labels unchanged
};

Decomposition family_decompose(const SetFamily& f, int v);

/// C(n-1, k-1); requires 1 <= k <= n/2.
std::uint64_t ekr_bound(int n, int k);
/// C(n-1, k-1) - C(n-k-1, k-1) + 1; requires 2 <= k <= n/2.
std::uint64_t hm_bound(int n, int k);

/// Least element common to all members; none for the empty family.
std::optional<int> is_star(const SetFamily& f);

/// True iff every wedge of s rows of V (repetition allowed) vanishes, which by
/// multilinearity means x1^...^xs = 0 for all x1, ..., xs in V.
bool self_annihilating(const Subspace& v, int s = 2);

/// One node of the shifted induction: a base case or a split at n into link and deletion.
struct RecursionNode {
  enum class Rule { single_element, complement_pairs, split };

  int n = 0;
  int k = 0;
  std::size_t size = 0;
  std::uint64_t bound = 0;
  Rule rule = Rule::split;
  bool satisfied = false;
  std::vector<RecursionNode> children;  ///< {link, del} for a split

  /// Longest root-to-leaf path, counted in edges.
  int depth() const;
};

std::string to_string(RecursionNode::Rule rule);

struct VerifyReport {
  std::string subject;
  std::size_t size = 0;
  std::uint64_t bound = 0;
  bool satisfied = false;
  std::optional<int> star_element;
  std::optional<RecursionNode> recursion;
  std::vector<TraceStep> trace;
  std::optional<SetFamily> family;
  /// Families attaining the reported size (Hilton–Milner search).
  std::vector<SetFamily> witnesses;
  std::uint64_t families_examined = 0;

  std::string summary() const;
};

/// Runs the link/deletion induction on a shifted intersecting family with
/// k <= n/2. Conclusions the induction takes for granted (link intersecting,
/// both parts shifted) are re-checked; a failure raises ClaimViolation.
VerifyReport shifted_ekr_verify(const SetFamily& f);

/// Degenerates a self-annihilating V to a shifted monomial subspace, checks
/// dimension and self-annihilation at every step, and verifies the resulting
/// family against the EKR bound.
VerifyReport ekr_pipeline(const Subspace& v, Route route = Route::init_then_shift);

/// Searches all shifted intersecting k-uniform families on [n] that are not
/// stars and compares the largest against hm_bound(n, k).
VerifyReport hilton_milner_verify(int n, int k, std::uint64_t budget = 10'000'000);

}  // namespace extshift
