#include "extshift/poly_scalar.hpp"

#include <stdexcept>

namespace extshift {

PolyScalar::PolyScalar(const Scalar& c) : coeffs_{c} { trim(); }

PolyScalar::PolyScalar(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyScalar PolyScalar::variable() { return PolyScalar(std::vector<Scalar>{0, 1}); }

void PolyScalar::trim() {
  while (!coeffs_.empty() && extshift::is_zero(coeffs_.back())) coeffs_.pop_back();
}

Scalar PolyScalar::coefficient(int d) const {
  return d >= 0 && d < static_cast<int>(coeffs_.size()) ? coeffs_[d] : Scalar(0);
}

Scalar PolyScalar::evaluate(const Scalar& t) const {
  Scalar acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

PolyScalar& PolyScalar::operator+=(const PolyScalar& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

PolyScalar& PolyScalar::operator-=(const PolyScalar& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

PolyScalar operator*(const PolyScalar& a, const PolyScalar& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return PolyScalar(std::move(c));
}

PolyScalar PolyScalar::operator-() const {
  PolyScalar r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string PolyScalar::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int d = degree(); d >= 0; --d) {
    const Scalar& c = coeffs_[d];
    if (extshift::is_zero(c)) continue;
    if (!s.empty()) s += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) s += '-';
    const Scalar mag = abs(c);
    if (d == 0 || mag != 1) s += extshift::to_string(mag) + (d ? "*" : "");
    if (d >= 1) s += "t";
    if (d >= 2) s += "^" + std::to_string(d);
  }
  return s;
}

namespace {

PolyScalar expand(const std::vector<std::vector<PolyScalar>>& m, std::size_t row,
                  std::vector<bool>& used) {
  const std::size_t n = m.size();
  if (row == n) return Scalar(1);
  PolyScalar acc;
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    if (used[c]) continue;
    if (!m[row][c].is_zero()) {
      used[c] = true;
      PolyScalar term = m[row][c] * expand(m, row + 1, used);
      used[c] = false;
      if (sign > 0) acc += term;
      else acc -= term;
    }
    sign = -sign;
  }
  return acc;
}

}  // namespace

PolyScalar poly_determinant(const std::vector<std::vector<PolyScalar>>& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw std::invalid_argument("poly_determinant: non-square matrix");
  std::vector<bool> used(m.size(), false);
  return expand(m, 0, used);
}

}  // namespace extshift
