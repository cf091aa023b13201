#include "extshift/factor.hpp"

#include "extshift/ekr.hpp"
#include "extshift/enumerate.hpp"
#include "extshift/errors.hpp"

namespace extshift {

namespace {

MonomialOrder grade_one(int n) { return MonomialOrder{OrderKind::lex, n, 1}; }

Subspace whole_grade_one(int n) {
  std::vector<Multivector> basis;
  for (int i = 1; i <= n; ++i) basis.push_back(Multivector::basis_vector(n, i));
  return Subspace::span(grade_one(n), basis);
}

/// Appends to `m` (n rows) the coordinates of e_i ^ x for i = 1..n.
void append_multiplication_block(Matrix& m, const Multivector& x, int k) {
  const int n = x.n();
  if (k + 1 > n) return;
  const auto frame = frame_for(MonomialOrder{OrderKind::lex, n, k + 1});
  Matrix grown(static_cast<std::size_t>(n), m.cols() + frame->size());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) grown(r, c) = m(r, c);
  for (int i = 1; i <= n; ++i) {
    const auto coords = frame->coordinates(wedge(Multivector::basis_vector(n, i), x));
    for (std::size_t c = 0; c < coords.size(); ++c) grown(i - 1, m.cols() + c) = coords[c];
  }
  m = std::move(grown);
}

/// Grade-1 vectors a = Σ a_i e_i with Σ a_i (row i of m) = 0.
Subspace left_kernel(const Matrix& m, int n) {
  if (m.cols() == 0) return whole_grade_one(n);
  const Matrix kernel = nullspace(m.transpose());
  std::vector<Multivector> basis;
  for (std::size_t r = 0; r < kernel.rows(); ++r) {
    Multivector a(n);
    for (int i = 1; i <= n; ++i) a.add_term(IndexSet{i}, kernel(r, i - 1));
    basis.push_back(std::move(a));
  }
  return Subspace::span(grade_one(n), basis);
}

}  // namespace

Subspace linear_factors(const Multivector& v) {
  if (v.is_zero()) {
    throw std::invalid_argument("linear_factors of 0: every vector of grade 1 is a factor");
  }
  const int k = v.grade();
  if (k < 0) throw std::invalid_argument("linear_factors needs a homogeneous element");
  Matrix m(static_cast<std::size_t>(v.n()), 0);
  append_multiplication_block(m, v, k);
  return left_kernel(m, v.n());
}

Multivector extract_cofactor(const Multivector& v, const Multivector& a) {
  if (a.n() != v.n()) throw DimensionMismatch("extract_cofactor: ground dimensions differ");
  if (a.is_zero()) throw std::invalid_argument("extract_cofactor: the factor must be nonzero");
  if (a.grade() != 1) throw std::invalid_argument("extract_cofactor: the factor must have grade 1");
  if (!wedge(a, v).is_zero()) throw std::invalid_argument("extract_cofactor: not a linear factor");

  const int n = v.n();
  const int p = a.terms().begin()->first.min();
  Matrix basis = Matrix::identity(n);
  for (int r = 1; r <= n; ++r) basis(r - 1, p - 1) = a.coefficient(IndexSet{r});
  const LinearMap change(std::move(basis));
  const Multivector moved = apply_linear(change.inverse(), v);

  Multivector cofactor(n);
  for (const auto& [s, c] : moved.terms()) {
    if (!s.contains(p)) {
      throw ClaimViolation("e" + std::to_string(p) + " divides " + moved.to_string() +
                           " but is missing from a term");
    }
    cofactor.add_term(s.without(p), (s.count_below(p) & 1) ? Scalar(-c) : c);
  }
  return apply_linear(change, cofactor);
}

FactorReport factor_report(const Multivector& v) {
  FactorReport report{v, linear_factors(v), false, {}};
  report.decomposable = static_cast<int>(report.factor_space.dim()) == v.grade();
  for (const auto& a : report.factor_space.rows()) report.cofactors.push_back(extract_cofactor(v, a));
  return report;
}

Subspace common_annihilator(const Subspace& v) {
  if (v.is_zero()) return whole_grade_one(v.n());
  Matrix m(static_cast<std::size_t>(v.n()), 0);
  for (const auto& row : v.rows()) append_multiplication_block(m, row, v.k());
  return left_kernel(m, v.n());
}

std::vector<Multivector> cross_example_generators(int k) {
  if (k < 3 || k % 2 == 0) {
    throw std::invalid_argument("cross_example needs an odd k >= 3 (got " + std::to_string(k) + ")");
  }
  const int n = 2 * k;
  std::vector<Multivector> gens;
  for (IndexSet a : k_subsets(n, k)) {
    if (!a.contains(1)) continue;
    gens.push_back(Multivector::monomial(n, a) + Multivector::monomial(n, a.complement(n)));
  }
  return gens;
}

Subspace cross_example(int k) {
  const auto gens = cross_example_generators(k);
  const int n = 2 * k;
  Subspace v = Subspace::span(MonomialOrder{OrderKind::lex, n, k}, gens);
  if (v.dim() != binomial(2 * k - 1, k - 1)) {
    throw ClaimViolation("cross example has dimension " + std::to_string(v.dim()));
  }
  if (!self_annihilating(v)) throw ClaimViolation("cross example is not self-annihilating");
  for (const auto& g : gens) {
    if (!linear_factors(g).is_zero()) {
      throw ClaimViolation("generator " + g.to_string() + " has a linear factor");
    }
  }
  if (!common_annihilator(v).is_zero()) throw ClaimViolation("cross example has a common annihilator");
  return v;
}

ProbeRecord probe_subspace(const Subspace& v, const std::string& label, bool transformed,
                           std::optional<bool> star) {
  ProbeRecord record{label, v.dim(), false, common_annihilator(v).dim(), transformed};
  if (star) {
    record.star = *star;
  } else if (!v.is_zero()) {
    IndexSet common = IndexSet::full(v.n());
    for (const auto& row : v.rows())
      for (const auto& [s, c] : row.terms()) common = common & s;
    record.star = !common.empty();
  }
  return record;
}

std::vector<ProbeRecord> hm_probe(int n, int k, const ProbeOptions& options) {
  const std::size_t floor = options.dim_floor ? *options.dim_floor : hm_bound(n, k);
  RandomSource rng(options.seed);
  std::vector<ProbeRecord> records;
  enumerate_families(
      n, k, EnumerationMode::shifted_intersecting,
      [&](const SetFamily& f) {
        if (f.size() <= floor) return;
        const bool star = is_star(f).has_value();
        const Subspace v = monomial_span(f);
        records.push_back(probe_subspace(v, f.to_string(), false, star));
        for (int s = 0; s < options.samples; ++s) {
          records.push_back(probe_subspace(transform(rng.invertible(n), v), f.to_string(), true, star));
        }
      },
      options.budget);
  return records;
}

}  // namespace extshift
