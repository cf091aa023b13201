#pragma once

#include <string>
#include <vector>

#include "extshift/scalar.hpp"

namespace extshift {

/// Polynomial in one variable t with rational coefficients; coeffs[d] multiplies t^d.
class PolyScalar {
 public:
  PolyScalar() = default;
  PolyScalar(const Scalar& c);  // NOLINT(google-explicit-constructor)
  explicit PolyScalar(std::vector<Scalar> coeffs);
  /// t
  static PolyScalar variable();

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Scalar coefficient(int d) const;
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  Scalar evaluate(const Scalar& t) const;

  PolyScalar& operator+=(const PolyScalar& o);
  PolyScalar& operator-=(const PolyScalar& o);
  friend PolyScalar operator+(PolyScalar a, const PolyScalar& b) { return a += b; }
  friend PolyScalar operator-(PolyScalar a, const PolyScalar& b) { return a -= b; }
  friend PolyScalar operator*(const PolyScalar& a, const PolyScalar& b);
  PolyScalar operator-() const;
  friend bool operator==(const PolyScalar&, const PolyScalar&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

/// Determinant of a square matrix of polynomials by cofactor expansion.
/// Cost grows factorially; meant for the small minors of the Plücker oracle.
PolyScalar poly_determinant(const std::vector<std::vector<PolyScalar>>& m);

}  // namespace extshift
