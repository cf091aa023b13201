#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "extshift/scalar.hpp"

namespace extshift {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const;
  bool row_is_zero(std::size_t r) const;
  void append_row(const std::vector<Scalar>& row);
  std::vector<Scalar> row(std::size_t r) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduces `m` in place to reduced row echelon form (leftmost pivots) and
/// drops the zero rows. Returns the pivot column of each remaining row.
std::vector<std::size_t> reduce_rows(Matrix& m);

std::size_t rank(Matrix m);

/// Basis of {x : m x = 0}, one vector per row of the result.
Matrix nullspace(const Matrix& m);

Scalar determinant(Matrix m);

std::optional<Matrix> inverse(const Matrix& m);

}  // namespace extshift
