// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic
// throughout. Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "extshift/ekr.hpp"
#include "extshift/enumerate.hpp"
#include "extshift/factor.hpp"
#include "extshift/limits.hpp"
#include "extshift/pluecker.hpp"
#include "extshift/random.hpp"
#include "oracles.hpp"

using namespace extshift;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail.str("");
      detail << "failed: " << what;
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<void(Outcome&)> body;
};

bool oracle_self_annihilating(const Subspace& v) {
  const auto& rows = v.rows();
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = a; b < rows.size(); ++b)
      if (!oracle::wedge(rows[a], rows[b]).empty()) return false;
  return true;
}

oracle::Dense dense_rows(const Subspace& v, const std::vector<Multivector>& gens) {
  oracle::Dense m;
  for (const auto& g : gens) {
    std::vector<mpq_class> row(v.frame().size());
    for (const auto& [s, c] : g.terms()) row[*v.frame().position(s)] = c;
    m.push_back(row);
  }
  return m;
}

/// Random intersecting family: a random greedy pass over shuffled k-subsets,
/// stopped at a random target size.
oracle::Family random_intersecting(RandomSource& rng, int n, int k) {
  auto pool = oracle::k_subsets(n, k);
  std::shuffle(pool.begin(), pool.end(), rng.engine());
  const int target = rng.uniform_int(1, static_cast<int>(binomial(n - 1, k - 1)));
  oracle::Family f;
  for (const auto& a : pool) {
    if (static_cast<int>(f.size()) == target) break;
    bool ok = true;
    for (const auto& b : f) ok = ok && oracle::meets(a, b);
    if (ok) f.insert(a);
  }
  return f;
}

// 1. Every intersecting family is within the EKR bound.
void ekr_exhaustive(Outcome& out) {
  for (auto [n, k] : {std::pair{4, 2}, {5, 2}, {6, 3}}) {
    std::uint64_t max_size = 0;
    bool all_intersecting = true;
    const auto count = enumerate_families(n, k, EnumerationMode::all_intersecting, [&](const SetFamily& f) {
      max_size = std::max<std::uint64_t>(max_size, f.size());
      all_intersecting = all_intersecting && oracle::intersecting(oracle::to_family(f));
    });
    out.require(all_intersecting, "enumerated a non-intersecting family");
    out.require(max_size <= ekr_bound(n, k), "family above the EKR bound");
    if (n <= 5) {
      std::uint64_t brute = 0;
      oracle::for_each_subfamily(n, k, [&](const oracle::Family& f) { brute += oracle::intersecting(f); });
      out.require(count == brute, "count differs from brute force at (" + std::to_string(n) + "," +
                                      std::to_string(k) + ")");
    }
    if (n == 6) {
      out.require(count == 59049, "expected 3^10 families at (6,3)");
      out.require(max_size == 10, "expected maximum 10 at (6,3)");
      out.detail << "(6,3): " << count << " families, max " << max_size;
    }
  }
}

// 2. The shifted induction accepts every shifted intersecting family.
void shifted_ekr(Outcome& out) {
  std::uint64_t total = 0;
  for (auto [n, k] : {std::pair{6, 2}, {7, 3}, {8, 3}}) {
    const auto bound = ekr_bound(n, k);
    std::uint64_t count = enumerate_families(n, k, EnumerationMode::shifted_intersecting, [&](const SetFamily& f) {
      const auto fam = oracle::to_family(f);
      out.require(oracle::shifted(fam) && oracle::intersecting(fam), "enumerated family is not shifted intersecting");
      if (f.empty()) return;
      const VerifyReport r = shifted_ekr_verify(f);
      out.require(r.satisfied && r.size <= bound && r.bound == bound, "verify rejected " + f.to_string());
      if (2 * k < n && f.size() == bound) out.require(oracle::star(fam, n), "extremal non-star " + f.to_string());
    });
    if (n == 6) {
      std::uint64_t brute = 0;
      oracle::for_each_subfamily(n, k, [&](const oracle::Family& f) {
        brute += oracle::shifted(f) && oracle::intersecting(f);
      });
      out.require(count == brute, "shifted count at (6,2) differs from brute force");
    }
    total += count;
  }
  out.detail << total << " shifted intersecting families verified";
}

// 3. Non-star shifted families obey the Hilton-Milner bound.
void hilton_milner(Outcome& out) {
  for (auto [n, k] : {std::pair{6, 2}, {7, 3}, {8, 3}}) {
    const VerifyReport r = hilton_milner_verify(n, k);
    std::size_t max_nonstar = 0;
    enumerate_families(n, k, EnumerationMode::shifted_intersecting, [&](const SetFamily& f) {
      if (!oracle::star(oracle::to_family(f), n)) max_nonstar = std::max(max_nonstar, f.size());
    });
    out.require(r.satisfied && r.size <= hm_bound(n, k), "HM bound violated");
    out.require(r.size == max_nonstar, "HM maximum differs from the oracle");
    out.detail << "(" << n << "," << k << ") max " << r.size << " <= " << hm_bound(n, k) << "; ";
    if (n == 6) {
      const oracle::Family triangle{{1, 2}, {1, 3}, {2, 3}};
      out.require(r.size == 3 && hm_bound(6, 2) == 3, "expected HM maximum 3 at (6,2)");
      out.require(r.witnesses.size() == 1 && oracle::to_family(r.witnesses[0]) == triangle,
                  "expected the triangle as the only witness at (6,2)");
    }
  }
}

// 4. Limit shifts agree with combinatorial shifts and with the Plücker limit.
void oracle_equivalence(Outcome& out) {
  const auto pairs_of = [](int n) {
    std::vector<ShiftPair> ps;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i != j) ps.push_back({i, j});
    return ps;
  };
  std::size_t monomial_checks = 0;
  oracle::for_each_subfamily(4, 2, [&](const oracle::Family& f) {
    const SetFamily fam = oracle::to_set_family(4, 2, f);
    for (const auto& p : pairs_of(4)) {
      const auto basis = monomial_basis(limit_shift(monomial_span(fam), p));
      out.require(basis && oracle::to_family(*basis) == oracle::comb_shift(f, p.i, p.j),
                  "limit_shift differs from S_ij on " + fam.to_string());
      out.require(oracle::to_family(combinatorial_shift(fam, p)) == oracle::comb_shift(f, p.i, p.j),
                  "combinatorial_shift differs from the oracle on " + fam.to_string());
      ++monomial_checks;
    }
  });
  RandomSource rng(4);
  int trials = 0;
  std::size_t pluecker_checks = 0;
  while (trials < 200) {
    const int m = rng.uniform_int(1, 3);
    const Subspace v = rng.subspace(MonomialOrder{OrderKind::lex, 4, 2}, m);
    if (static_cast<int>(v.dim()) != m) continue;
    ++trials;
    for (const auto& p : pairs_of(4)) {
      out.require(pluecker(limit_shift(v, p)) == pluecker_limit(v, p), "Plücker limit mismatch");
      ++pluecker_checks;
    }
  }
  out.detail << monomial_checks << " monomial checks, " << pluecker_checks << " Plücker checks over "
             << trials << " random subspaces";
}

// 5. init preserves dimension and picks the earliest Plücker coordinate.
void init_subspaces(Outcome& out) {
  RandomSource rng(5);
  int trials = 0;
  while (trials < 500) {
    const int n = rng.uniform_int(2, 5);
    const int k = rng.uniform_int(1, std::min(2, n - 1));
    const int m = rng.uniform_int(1, static_cast<int>(std::min<std::uint64_t>(3, binomial(n, k))));
    std::vector<Multivector> gens;
    for (int g = 0; g < m; ++g) gens.push_back(rng.multivector(n, k, 0.6));
    for (const OrderKind kind : {OrderKind::lex, OrderKind::weight2}) {
      const Subspace v = Subspace::span(MonomialOrder{kind, n, k}, gens);
      if (static_cast<int>(v.dim()) != m) break;
      if (kind == OrderKind::lex) ++trials;
      const Subspace in = init_subspace(v);
      out.require(in.dim() == v.dim(), "init changed the dimension");
      const auto basis = monomial_basis(in);
      out.require(basis.has_value(), "init is not monomial");
      if (!basis) return;
      // Earliest nonzero maximal minor of the generator matrix, by Leibniz.
      const oracle::Dense g = dense_rows(v, gens);
      std::vector<std::size_t> pool(v.frame().size());
      for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
      std::vector<std::size_t> earliest;
      for_each_combination(pool, static_cast<std::size_t>(m), [&](const std::vector<std::size_t>& cols) {
        if (!earliest.empty()) return;
        oracle::Dense minor;
        for (const auto& row : g) {
          std::vector<mpq_class> r;
          for (auto c : cols) r.push_back(row[c]);
          minor.push_back(r);
        }
        if (oracle::determinant(minor) != 0) earliest = cols;
      });
      oracle::Family expected;
      for (auto c : earliest) expected.insert(v.frame().monomial(c).indices());
      out.require(oracle::to_family(*basis) == expected, "init monomials differ from the earliest minor");
      out.require(pluecker(v).leading_key() == earliest, "leading Plücker key differs from the oracle");
    }
  }
  out.detail << trials << " random subspaces in both orders";
}

// 6. The degeneration pipeline on transformed intersecting families.
void pipeline(Outcome& out) {
  RandomSource rng(6);
  const std::vector<std::pair<int, int>> shapes{{4, 2}, {5, 2}, {6, 3}};
  std::size_t steps = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const auto [n, k] = shapes[static_cast<std::size_t>(trial) % shapes.size()];
    const oracle::Family f = random_intersecting(rng, n, k);
    const Subspace v = transform(rng.upper_triangular(n), monomial_span(oracle::to_set_family(n, k, f)));
    for (const Route route : {Route::iterate, Route::init_then_shift}) {
      const std::string where = "trial " + std::to_string(trial) + " route " + to_string(route);
      try {
        const VerifyReport r = ekr_pipeline(v, route);
        for (const auto& s : r.trace) {
          out.require(s.state.dim() == v.dim(), where + ": dimension changed");
          out.require(oracle_self_annihilating(s.state), where + ": self-annihilation lost");
        }
        steps += r.trace.size();
        const auto fam = oracle::to_family(*r.family);
        out.require(oracle::shifted(fam) && oracle::intersecting(fam), where + ": end family not shifted intersecting");
        out.require(fam.size() == v.dim() && fam.size() <= ekr_bound(n, k), where + ": size check");
        out.require(r.satisfied, where + ": bound not satisfied");
      } catch (const std::exception& e) {
        out.require(false, where + ": " + e.what());
      }
    }
  }
  out.detail << "120 trials on both routes, " << steps << " traced steps";
}

// 7. The cross example: extremal dimension with no linear factors.
void cross(Outcome& out) {
  const Subspace v = cross_example(3);
  const auto gens = cross_example_generators(3);
  out.require(v.n() == 6 && v.dim() == 10 && binomial(5, 2) == 10, "expected n = 6 and dim = 10");
  out.require(self_annihilating(v) && oracle_self_annihilating(v), "not self-annihilating");
  out.require(gens.size() == 10, "expected 10 generators");
  for (const auto& g : gens) {
    out.require(linear_factors(g).is_zero(), "generator " + g.to_string() + " has a linear factor");
    // a ↦ a∧g is injective exactly when g has no linear factor.
    oracle::Dense images;
    std::vector<oracle::Set> cols = oracle::k_subsets(6, 4);
    for (int i = 1; i <= 6; ++i) {
      const auto w = oracle::wedge(Multivector::basis_vector(6, i), g);
      std::vector<mpq_class> row;
      for (const auto& c : cols) row.push_back(w.count(c) ? w.at(c) : mpq_class(0));
      images.push_back(row);
    }
    out.require(oracle::rank(images) == 6, "oracle finds a linear factor of " + g.to_string());
  }
  out.require(common_annihilator(v).dim() == 0, "common annihilator is nonzero");
  out.detail << "n=6, dim=10, no generator has a linear factor";
}

// 8. Linear factors and cofactors round-trip.
void dibag(Outcome& out) {
  RandomSource rng(8);
  std::size_t round_trips = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = rng.uniform_int(2, 6);
    const int k = rng.uniform_int(1, std::min(3, n));
    Multivector v(n);
    int expected = -1;
    if (trial % 2 == 0) {
      // Product of k random linear forms; factor space has dimension k when nonzero.
      v = rng.multivector(n, 1, 0.7);
      for (int i = 1; i < k; ++i) v = wedge(v, rng.multivector(n, 1, 0.7));
      expected = k;
    } else {
      v = rng.multivector(n, k, 0.5);
    }
    if (v.is_zero()) continue;
    const Subspace factors = linear_factors(v);
    if (expected >= 0) out.require(static_cast<int>(factors.dim()) == expected, "decomposable factor count");
    for (const auto& a : factors.rows()) {
      out.require(oracle::wedge(a, v).empty(), "factor does not annihilate");
      const Multivector w = extract_cofactor(v, a);
      out.require(oracle::wedge(a, w) == oracle::terms_of(v), "a^cofactor != v for " + v.to_string());
      ++round_trips;
    }
  }
  std::size_t pairs = 0;
  const auto all = k_subsets(4, 2);
  for (auto a : all)
    for (auto b : all) {
      if (!lex_less(a, b)) continue;
      for (int sign : {1, -1}) {
        const Multivector v = Multivector::monomial(4, a) + Multivector::monomial(4, b, sign);
        // A 2-form is decomposable exactly when its square vanishes.
        const bool decomposable = oracle::wedge(v, v).empty();
        const FactorReport r = factor_report(v);
        out.require(r.decomposable == decomposable, "decomposability of " + v.to_string());
        out.require(r.factor_space.dim() == (decomposable ? 2u : 0u), "factor space of " + v.to_string());
        ++pairs;
      }
    }
  out.detail << round_trips << " cofactor round trips, " << pairs << " monomial-pair sums";
}

// 9. Shifted monomial spans are Borel-fixed; others are moved by a limit shift.
void fixed_points(Outcome& out) {
  RandomSource rng(9);
  std::size_t shifted_checked = 0, moved_checked = 0;
  for (auto [n, k] : {std::pair{5, 2}, {6, 3}}) {
    for (const auto& f : collect_families(n, k, EnumerationMode::shifted_intersecting)) {
      const Subspace v = monomial_span(f);
      for (const auto& p : lowering_pairs(n)) out.require(limit_shift(v, p) == v, "shifted family moved");
      for (int s = 0; s < 50; ++s) {
        const LinearMap g = rng.upper_triangular(n);
        out.require(g.is_upper_triangular() && g.is_invertible() && transform(g, v) == v,
                    "Borel element moved " + f.to_string());
      }
      ++shifted_checked;
    }
    int sampled = 0;
    enumerate_families(n, k, EnumerationMode::all_intersecting, [&](const SetFamily& f) {
      if (sampled >= 300 || oracle::shifted(oracle::to_family(f)) || rng.uniform_int(0, 9) != 0) return;
      ++sampled;
      const Subspace v = monomial_span(f);
      bool moved = false;
      for (const auto& p : lowering_pairs(n)) moved = moved || !(limit_shift(v, p) == v);
      out.require(moved, "non-shifted family fixed by every limit shift: " + f.to_string());
      ++moved_checked;
    });
  }
  out.detail << shifted_checked << " shifted families fixed, " << moved_checked << " non-shifted families moved";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "EKR bound over all intersecting families", 60, ekr_exhaustive},
      {2, "shifted EKR induction", 300, shifted_ekr},
      {3, "Hilton-Milner bound", 300, hilton_milner},
      {4, "limit shift oracles", 120, oracle_equivalence},
      {5, "initial subspaces", 120, init_subspaces},
      {6, "degeneration pipeline", 300, pipeline},
      {7, "cross example", 10, cross},
      {8, "linear factors", 60, dibag},
      {9, "fixed-point characterizations", 120, fixed_points},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.require(seconds < c.limit_seconds, "runtime " + std::to_string(seconds) + "s over the limit");
    if (!out.ok) ++failures;
    std::printf("[%s] criterion %d %s: %s (%.2fs)\n", out.ok ? "PASS" : "FAIL", c.id, c.title.c_str(),
                out.detail.str().c_str(), seconds);
    std::fflush(stdout);
  }
  return failures;
}
