#pragma once

#include <optional>
#include <string>
#include <vector>

#include "extshift/multivector.hpp"
#include "extshift/pluecker.hpp"
#include "extshift/set_family.hpp"
#include "extshift/subspace.hpp"

namespace extshift {

/// Direction of a shift: index i is traded for index j.
/// Shifting toward a shifted family uses i > j.
struct ShiftPair {
  int i = 0;
  int j = 0;

  /// Throws unless i ≠ j and both lie in [1, n].
  void check(int n) const;
  std::string to_string() const;
  friend bool operator==(const ShiftPair&, const ShiftPair&) = default;
};

/// All pairs i > j over [n], ordered lexicographically by (j, i).
std::vector<ShiftPair> lowering_pairs(int n);

/// The linear map that sends e_i ^ v to e_j ^ v and kills every monomial
/// without e_i. It squares to zero.
Multivector phi_map(const Multivector& x, ShiftPair p);

/// lim_{t→∞} M_ij(t)·V, where M_ij(t) sends e_i to e_i + t·e_j, computed as
/// φ(V) + {x ∈ V : φ(x) ∈ V ∩ φ(V)}. Throws ClaimViolation if the result
/// does not have dimension dim V.
Subspace limit_shift(const Subspace& v, ShiftPair p);

/// Replaces each A ∋ i with j ∉ A by (A∖i)∪j unless that set is already present.
SetFamily combinatorial_shift(const SetFamily& f, ShiftPair p);

/// Span of the pivot monomials of V's echelon rows (the initial monomials
/// under V's monomial order).
Subspace init_subspace(const Subspace& v);

enum class Route { iterate, init_then_shift };
std::string to_string(Route route);
Route parse_route(std::string_view text);

enum class StepKind { limit_shift, comb_shift, init };
std::string to_string(StepKind kind);

struct TraceStep {
  int step = 0;
  StepKind kind = StepKind::init;
  std::optional<ShiftPair> pair;
  std::size_t dim = 0;
  bool monomial = false;
  bool shifted = false;
  Subspace state;
};

struct FixedPointResult {
  Subspace result;
  std::vector<TraceStep> trace;
  int rounds = 0;
};

/// Drives V to a subspace fixed by every upper-triangular matrix.
///
/// iterate: round-robin limit_shift over lowering_pairs(n) until a full round
/// changes nothing; throws NonTermination after max_rounds rounds.
/// init_then_shift: init_subspace, then combinatorial shifting of the support
/// family until it is shifted (always terminates).
/// max_rounds <= 0 selects 10·n². Only steps that change the subspace are traced.
FixedPointResult bn_fixed_point(const Subspace& v, Route route = Route::init_then_shift,
                                int max_rounds = 0);

/// Exact image M_ij(t0)·V.
Subspace finite_t_action(const Subspace& v, ShiftPair p, const Scalar& t0);

/// Projective limit of the Plücker vector of M_ij(t)·V as t → ∞: the
/// coefficients of the top power of t among all maximal minors, which are
/// computed symbolically from the matrix M_ij(t). Independent of limit_shift.
PlueckerVector pluecker_limit(const Subspace& v, ShiftPair p);

/// Projective limit of the Plücker vector of N(t)·V, N(t) = diag(t^{-2^1}, ..., t^{-2^n}).
/// Coordinates of N(t)·V are those of V scaled by t^{-w}, w the total weight
/// of the indexing monomials, so the limit keeps the minimum-weight coordinates.
PlueckerVector pluecker_torus_limit(const Subspace& v);

}  // namespace extshift
