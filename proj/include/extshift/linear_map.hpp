#pragma once

#include "extshift/linalg.hpp"
#include "extshift/multivector.hpp"

namespace extshift {

/// An n×n rational matrix acting on Q^n; column j is the image of e_{j+1}.
/// The action extends to every exterior power by e_{i1}^...^e_{ik} ↦ g(e_{i1})^...^g(e_{ik}).
class LinearMap {
 public:
  explicit LinearMap(Matrix entries);

  static LinearMap identity(int n);
  /// Identity plus t in row j, column i (1-based): e_i ↦ e_i + t·e_j.
  static LinearMap elementary(int n, int i, int j, const Scalar& t);
  static LinearMap diagonal(const std::vector<Scalar>& diag);

  int n() const { return static_cast<int>(entries_.rows()); }
  const Matrix& entries() const { return entries_; }
  /// 0-based entry access.
  const Scalar& operator()(std::size_t row, std::size_t col) const { return entries_(row, col); }
  /// g(e_i) as a grade-1 multivector (1-based i).
  Multivector image_of_basis(int i) const;

  bool is_upper_triangular() const;
  bool is_diagonal_invertible() const;
  bool is_unipotent_upper() const;
  bool is_invertible() const;

  LinearMap inverse() const;
  friend LinearMap operator*(const LinearMap& g, const LinearMap& h) {
    return LinearMap(g.entries_ * h.entries_);
  }
  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  Matrix entries_;
};

Multivector apply_linear(const LinearMap& g, const Multivector& x);

}  // namespace extshift
