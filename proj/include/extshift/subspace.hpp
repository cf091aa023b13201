#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "extshift/linear_map.hpp"
#include "extshift/monomial_order.hpp"
#include "extshift/multivector.hpp"
#include "extshift/set_family.hpp"

namespace extshift {

/// A linear subspace of the grade-k part of the exterior algebra over Q^n.
///
/// The rows are the reduced echelon basis with respect to the monomial order:
/// each row has coefficient 1 on its pivot (its order-earliest monomial),
/// pivots strictly increase, and no pivot monomial occurs in another row.
/// This form is unique, so two subspaces in the same order are equal exactly
/// when their rows are equal.
class Subspace {
 public:
  /// The zero subspace.
  explicit Subspace(const MonomialOrder& order);

  /// Row space of `vectors`; each must be zero or homogeneous of grade order.k over [order.n].
  static Subspace span(const MonomialOrder& order, const std::vector<Multivector>& vectors);
  /// Row space of a dense coordinate matrix in the frame of `order`.
  static Subspace from_coordinates(const MonomialOrder& order, Matrix coords);

  int n() const { return order_.n; }
  int k() const { return order_.k; }
  const MonomialOrder& order() const { return order_; }
  const CoordinateFrame& frame() const { return *frame_; }
  std::size_t dim() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }
  const std::vector<Multivector>& rows() const { return rows_; }
  /// Pivot monomial of each row, in increasing order.
  const std::vector<IndexSet>& pivots() const { return pivots_; }
  /// Rows as a dim × frame().size() coordinate matrix.
  Matrix coordinates() const;

  bool contains(const Multivector& x) const;
  /// Same subspace, re-canonicalized under another monomial order.
  Subspace reordered(OrderKind kind) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.order_ == b.order_ && a.rows_ == b.rows_;
  }

 private:
  MonomialOrder order_;
  std::shared_ptr<const CoordinateFrame> frame_;
  std::vector<Multivector> rows_;
  std::vector<IndexSet> pivots_;
};

Subspace sum(const Subspace& v, const Subspace& w);
Subspace intersect(const Subspace& v, const Subspace& w);

using LinearOperator = std::function<Multivector(const Multivector&)>;

/// Span of f(row) over the rows of v. f must be linear and send grade k to grade k.
Subspace apply_map(const Subspace& v, const LinearOperator& f);

/// g·V for an n×n matrix g acting on the grade-k component.
Subspace transform(const LinearMap& g, const Subspace& v);

/// The supports of the monomial basis, if V has one.
std::optional<SetFamily> monomial_basis(const Subspace& v);

/// Span of the monomials m_A, A ∈ F.
Subspace monomial_span(const SetFamily& f, OrderKind kind = OrderKind::lex);

}  // namespace extshift
