#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "extshift/index_set.hpp"
#include "extshift/scalar.hpp"

namespace extshift {

/// The basis element e_{i1}^...^e_{ik} of the exterior algebra over Q^n,
/// with i1 < ... < ik.
struct Monomial {
  int n = 0;
  IndexSet support;

  int grade() const { return support.size(); }
  /// "e1^e3", or "1" for the empty support.
  std::string to_string() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Sign of e_A ^ e_B relative to e_{A∪B} for disjoint A, B: the parity of
/// the permutation that merges the two sorted sequences.
int merge_sign(IndexSet a, IndexSet b);

/// Sparse element of the exterior algebra over Q^n. Terms are keyed by
/// support in lexicographic order and never hold a zero coefficient.
class Multivector {
 public:
  using Terms = std::map<IndexSet, Scalar, LexLess>;

  explicit Multivector(int n);
  Multivector(int n, const Terms& terms);

  static Multivector monomial(int n, IndexSet support, const Scalar& coefficient = 1);
  /// e_i
  static Multivector basis_vector(int n, int i);
  /// Parses the canonical text form, e.g. "e1^e2 - 1/2*e3^e4". Unsorted
  /// factors are reordered with the matching sign; repeated factors give 0.
  static Multivector parse(int n, std::string_view text);

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::set<int> grades() const;
  bool is_homogeneous() const { return grades().size() <= 1; }
  /// Grade of a nonzero homogeneous element; -1 otherwise.
  int grade() const;
  Scalar coefficient(IndexSet support) const;

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(const Scalar& c);
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(const Scalar& c, Multivector a) { return a *= c; }
  friend Multivector operator*(Multivector a, const Scalar& c) { return a *= c; }
  Multivector operator-() const;

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  /// Canonical text form; "0" for the zero element.
  std::string to_string() const;

  /// Adds c * e_S in place.
  void add_term(IndexSet support, const Scalar& c);

 private:
  int n_;
  Terms terms_;
};

/// Σ c_r x_r over a ground dimension n.
Multivector linear_combine(int n, const std::vector<std::pair<Scalar, Multivector>>& pairs);

Multivector wedge(const Multivector& x, const Multivector& y);

}  // namespace extshift
