#include "extshift/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace extshift {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::row_is_zero(std::size_t r) const {
  for (std::size_t c = 0; c < cols_; ++c)
    if (!is_zero((*this)(r, c))) return false;
  return true;
}

void Matrix::append_row(const std::vector<Scalar>& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

std::vector<std::size_t> reduce_rows(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t p = lead;
    while (p < m.rows() && is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    if (p != lead)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(lead, c));
    const Scalar inv = 1 / m(lead, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(lead, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || is_zero(m(r, col))) continue;
      const Scalar f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(lead, c);
    }
    pivots.push_back(col);
    ++lead;
  }
  Matrix trimmed(lead, m.cols());
  for (std::size_t r = 0; r < lead; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) trimmed(r, c) = std::move(m(r, c));
  m = std::move(trimmed);
  return pivots;
}

std::size_t rank(Matrix m) { return reduce_rows(m).size(); }

Matrix nullspace(const Matrix& m) {
  Matrix r = m;
  const auto pivots = reduce_rows(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix basis(m.cols() - pivots.size(), m.cols());
  std::size_t out = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(out, free) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(out, pivots[i]) = -r(i, free);
    ++out;
  }
  return basis;
}

Scalar determinant(Matrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Scalar det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && is_zero(m(p, col))) ++p;
    if (p == n) return 0;
    if (p != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(p, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(m(r, col))) continue;
      const Scalar f = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Matrix{};
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const auto pivots = reduce_rows(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

}  // namespace extshift
