#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "extshift/index_set.hpp"
#include "extshift/multivector.hpp"

namespace extshift {

enum class OrderKind {
  lex,      ///< sorted index sequences compared lexicographically
  weight2,  ///< increasing Σ_{i∈S} 2^i
};

std::string to_string(OrderKind kind);
OrderKind parse_order_kind(std::string_view text);

/// Total order on the grade-k monomials over [n]; "earlier" is smaller.
struct MonomialOrder {
  OrderKind kind = OrderKind::lex;
  int n = 0;
  int k = 0;

  bool earlier(IndexSet a, IndexSet b) const {
    return kind == OrderKind::lex ? lex_less(a, b) : weight_less(a, b);
  }
  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// The grade-k monomials listed in a MonomialOrder, with reverse lookup.
/// Dense coordinate vectors of grade-k multivectors are indexed by position here.
class CoordinateFrame {
 public:
  explicit CoordinateFrame(MonomialOrder order);

  const MonomialOrder& order() const { return order_; }
  std::size_t size() const { return monomials_.size(); }
  IndexSet monomial(std::size_t pos) const { return monomials_[pos]; }
  const std::vector<IndexSet>& monomials() const { return monomials_; }
  std::optional<std::size_t> position(IndexSet s) const;

  /// Throws DimensionMismatch unless x is zero or homogeneous of grade k over [n].
  std::vector<Scalar> coordinates(const Multivector& x) const;
  Multivector element(const std::vector<Scalar>& coords) const;

 private:
  MonomialOrder order_;
  std::vector<IndexSet> monomials_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// Frames are immutable; this hands out a shared instance per order.
std::shared_ptr<const CoordinateFrame> frame_for(const MonomialOrder& order);

}  // namespace extshift
