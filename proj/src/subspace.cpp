#include "extshift/subspace.hpp"

#include "extshift/errors.hpp"

namespace extshift {

namespace {

void check_compatible(const Subspace& v, const Subspace& w, const char* op) {
  if (!(v.order() == w.order())) {
    throw DimensionMismatch(std::string(op) + ": subspaces differ in n, k or monomial order");
  }
}

}  // namespace

Subspace::Subspace(const MonomialOrder& order) : order_(order), frame_(frame_for(order)) {}

Subspace Subspace::from_coordinates(const MonomialOrder& order, Matrix coords) {
  Subspace v(order);
  if (coords.rows() == 0) return v;
  if (coords.cols() != v.frame_->size()) {
    throw DimensionMismatch("coordinate matrix width does not match the monomial frame");
  }
  const auto pivot_cols = reduce_rows(coords);
  v.rows_.reserve(pivot_cols.size());
  for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
    v.rows_.push_back(v.frame_->element(coords.row(r)));
    v.pivots_.push_back(v.frame_->monomial(pivot_cols[r]));
  }
  return v;
}

Subspace Subspace::span(const MonomialOrder& order, const std::vector<Multivector>& vectors) {
  const auto frame = frame_for(order);
  Matrix coords;
  for (const auto& x : vectors) coords.append_row(frame->coordinates(x));
  return from_coordinates(order, std::move(coords));
}

Matrix Subspace::coordinates() const {
  Matrix m(rows_.size(), frame_->size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [s, c] : rows_[r].terms()) m(r, *frame_->position(s)) = c;
  return m;
}

bool Subspace::contains(const Multivector& x) const {
  auto coords = frame_->coordinates(x);
  // Rows are reduced: subtracting coords[pivot] * row clears each pivot in turn.
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = *frame_->position(pivots_[r]);
    if (extshift::is_zero(coords[p])) continue;
    const Scalar f = coords[p];
    for (const auto& [s, c] : rows_[r].terms()) coords[*frame_->position(s)] -= f * c;
  }
  for (const auto& c : coords)
    if (!extshift::is_zero(c)) return false;
  return true;
}

Subspace Subspace::reordered(OrderKind kind) const {
  return span(MonomialOrder{kind, order_.n, order_.k}, rows_);
}

Subspace sum(const Subspace& v, const Subspace& w) {
  check_compatible(v, w, "sum");
  Matrix coords = v.coordinates();
  const Matrix other = w.coordinates();
  for (std::size_t r = 0; r < other.rows(); ++r) coords.append_row(other.row(r));
  return Subspace::from_coordinates(v.order(), std::move(coords));
}

Subspace intersect(const Subspace& v, const Subspace& w) {
  check_compatible(v, w, "intersect");
  // Zassenhaus: rows (x | x) for x in V and (y | 0) for y in W. After reduction
  // the rows with vanishing left half carry a basis of V ∩ W on the right.
  const std::size_t width = v.frame().size();
  const Matrix a = v.coordinates();
  const Matrix b = w.coordinates();
  Matrix z(a.rows() + b.rows(), 2 * width);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < width; ++c) {
      z(r, c) = a(r, c);
      z(r, width + c) = a(r, c);
    }
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < width; ++c) z(a.rows() + r, c) = b(r, c);
  const auto pivots = reduce_rows(z);
  Matrix meet;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] < width) continue;
    std::vector<Scalar> row(width);
    for (std::size_t c = 0; c < width; ++c) row[c] = z(r, width + c);
    meet.append_row(row);
  }
  return Subspace::from_coordinates(v.order(), std::move(meet));
}

Subspace apply_map(const Subspace& v, const LinearOperator& f) {
  std::vector<Multivector> images;
  images.reserve(v.dim());
  for (const auto& row : v.rows()) {
    Multivector img = f(row);
    if (!img.is_zero() && !img.is_homogeneous()) {
      throw DimensionMismatch("apply_map: image '" + img.to_string() + "' is not homogeneous");
    }
    images.push_back(std::move(img));
  }
  return Subspace::span(v.order(), images);
}

Subspace transform(const LinearMap& g, const Subspace& v) {
  return apply_map(v, [&g](const Multivector& x) { return apply_linear(g, x); });
}

std::optional<SetFamily> monomial_basis(const Subspace& v) {
  for (const auto& row : v.rows())
    if (row.terms().size() != 1) return std::nullopt;
  return SetFamily(v.n(), v.k(), v.pivots());
}

Subspace monomial_span(const SetFamily& f, OrderKind kind) {
  std::vector<Multivector> monomials;
  monomials.reserve(f.size());
  for (IndexSet s : f.sets()) monomials.push_back(Multivector::monomial(f.n(), s));
  return Subspace::span(MonomialOrder{kind, f.n(), f.k()}, monomials);
}

}  // namespace extshift
