#include "extshift/random.hpp"

namespace extshift {

int RandomSource::uniform_int(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(engine_);
}

Scalar RandomSource::rational() {
  Scalar q(uniform_int(-9, 9), uniform_int(1, 9));
  q.canonicalize();
  return q;
}

Scalar RandomSource::nonzero_rational() {
  Scalar q;
  do q = rational();
  while (is_zero(q));
  return q;
}

Multivector RandomSource::multivector(int n, int k, double density) {
  std::bernoulli_distribution keep(density);
  Multivector x(n);
  for (IndexSet s : k_subsets(n, k))
    if (keep(engine_)) x.add_term(s, rational());
  return x;
}

LinearMap RandomSource::upper_triangular(int n) {
  Matrix m(n, n);
  for (int r = 0; r < n; ++r) {
    m(r, r) = nonzero_rational();
    for (int c = r + 1; c < n; ++c) m(r, c) = rational();
  }
  return LinearMap(std::move(m));
}

LinearMap RandomSource::invertible(int n) {
  while (true) {
    Matrix m(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m(r, c) = rational();
    LinearMap g(std::move(m));
    if (g.is_invertible()) return g;
  }
}

Subspace RandomSource::subspace(const MonomialOrder& order, int m) {
  std::vector<Multivector> gens;
  for (int i = 0; i < m; ++i) gens.push_back(multivector(order.n, order.k));
  return Subspace::span(order, gens);
}

}  // namespace extshift
