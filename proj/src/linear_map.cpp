#include "extshift/linear_map.hpp"

#include <stdexcept>

#include "extshift/errors.hpp"

namespace extshift {

LinearMap::LinearMap(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) throw std::invalid_argument("LinearMap must be square");
  if (entries_.rows() > static_cast<std::size_t>(kMaxDimension)) {
    throw std::invalid_argument("LinearMap dimension out of range");
  }
}

LinearMap LinearMap::identity(int n) { return LinearMap(Matrix::identity(n)); }

LinearMap LinearMap::elementary(int n, int i, int j, const Scalar& t) {
  if (i < 1 || j < 1 || i > n || j > n || i == j) {
    throw std::invalid_argument("elementary map needs distinct indices in [1,n]");
  }
  Matrix m = Matrix::identity(n);
  m(j - 1, i - 1) = t;
  return LinearMap(std::move(m));
}

LinearMap LinearMap::diagonal(const std::vector<Scalar>& diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t r = 0; r < diag.size(); ++r) m(r, r) = diag[r];
  return LinearMap(std::move(m));
}

Multivector LinearMap::image_of_basis(int i) const {
  Multivector v(n());
  for (int r = 1; r <= n(); ++r) v.add_term(IndexSet{r}, entries_(r - 1, i - 1));
  return v;
}

bool LinearMap::is_upper_triangular() const {
  for (std::size_t r = 0; r < entries_.rows(); ++r)
    for (std::size_t c = 0; c < r; ++c)
      if (!is_zero(entries_(r, c))) return false;
  return true;
}

bool LinearMap::is_diagonal_invertible() const {
  for (std::size_t r = 0; r < entries_.rows(); ++r)
    for (std::size_t c = 0; c < entries_.cols(); ++c)
      if ((r == c) == is_zero(entries_(r, c))) return false;
  return true;
}

bool LinearMap::is_unipotent_upper() const {
  if (!is_upper_triangular()) return false;
  for (std::size_t r = 0; r < entries_.rows(); ++r)
    if (entries_(r, r) != 1) return false;
  return true;
}

bool LinearMap::is_invertible() const { return !is_zero(determinant(entries_)); }

LinearMap LinearMap::inverse() const {
  auto inv = extshift::inverse(entries_);
  if (!inv) throw std::invalid_argument("LinearMap is singular");
  return LinearMap(std::move(*inv));
}

Multivector apply_linear(const LinearMap& g, const Multivector& x) {
  if (g.n() != x.n()) {
    throw DimensionMismatch("apply_linear: map dimension " + std::to_string(g.n()) +
                            " vs multivector dimension " + std::to_string(x.n()));
  }
  std::vector<Multivector> columns;
  columns.reserve(g.n());
  for (int i = 1; i <= g.n(); ++i) columns.push_back(g.image_of_basis(i));

  Multivector out(x.n());
  for (const auto& [support, c] : x.terms()) {
    Multivector img = Multivector::monomial(x.n(), IndexSet{}, c);
    for (int i : support.indices()) {
      img = wedge(img, columns[i - 1]);
      if (img.is_zero()) break;
    }
    out += img;
  }
  return out;
}

}  // namespace extshift
