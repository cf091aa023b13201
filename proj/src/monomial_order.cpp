#include "extshift/monomial_order.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "extshift/errors.hpp"

namespace extshift {

std::string to_string(OrderKind kind) { return kind == OrderKind::lex ? "lex" : "weight2"; }

OrderKind parse_order_kind(std::string_view text) {
  if (text == "lex") return OrderKind::lex;
  if (text == "weight2") return OrderKind::weight2;
  throw ParseError("unknown monomial order '" + std::string(text) + "' (expected lex or weight2)");
}

CoordinateFrame::CoordinateFrame(MonomialOrder order) : order_(order) {
  if (order.n < 0 || order.n > kMaxDimension || order.k < 0 || order.k > order.n) {
    throw std::invalid_argument("monomial order needs 0 <= k <= n <= 64");
  }
  monomials_ = k_subsets(order.n, order.k);
  std::sort(monomials_.begin(), monomials_.end(),
            [&](IndexSet a, IndexSet b) { return order_.earlier(a, b); });
  index_.reserve(monomials_.size());
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i].bits(), i);
}

std::optional<std::size_t> CoordinateFrame::position(IndexSet s) const {
  auto it = index_.find(s.bits());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Scalar> CoordinateFrame::coordinates(const Multivector& x) const {
  if (x.n() != order_.n) {
    throw DimensionMismatch("ground dimension " + std::to_string(x.n()) + ", expected " +
                            std::to_string(order_.n));
  }
  std::vector<Scalar> coords(monomials_.size());
  for (const auto& [s, c] : x.terms()) {
    auto pos = position(s);
    if (!pos) {
      throw DimensionMismatch("term of grade " + std::to_string(s.size()) + " in '" +
                              x.to_string() + "', expected grade " + std::to_string(order_.k));
    }
    coords[*pos] = c;
  }
  return coords;
}

Multivector CoordinateFrame::element(const std::vector<Scalar>& coords) const {
  Multivector x(order_.n);
  for (std::size_t i = 0; i < coords.size(); ++i) x.add_term(monomials_[i], coords[i]);
  return x;
}

std::shared_ptr<const CoordinateFrame> frame_for(const MonomialOrder& order) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, std::shared_ptr<const CoordinateFrame>> cache;
  const auto key = std::make_tuple(static_cast<int>(order.kind), order.n, order.k);
  std::lock_guard lock(mutex);
  auto& slot = cache[key];
  if (!slot) slot = std::make_shared<const CoordinateFrame>(order);
  return slot;
}

}  // namespace extshift
