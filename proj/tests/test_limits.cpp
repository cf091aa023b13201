#include <doctest.h>

#include "extshift/errors.hpp"
#include "extshift/limits.hpp"
#include "extshift/pluecker.hpp"
#include "extshift/random.hpp"
#include "oracles.hpp"

using namespace extshift;

namespace {
Multivector mv(int n, const char* text) { return Multivector::parse(n, text); }
Subspace sp(int n, int k, std::initializer_list<const char*> rows, OrderKind kind = OrderKind::lex) {
  std::vector<Multivector> v;
  for (auto r : rows) v.push_back(mv(n, r));
  return Subspace::span(MonomialOrder{kind, n, k}, v);
}
SetFamily fam(int n, int k, std::vector<std::vector<int>> sets) {
  std::vector<IndexSet> s;
  for (const auto& a : sets) s.push_back(IndexSet::from_indices(a));
  return SetFamily(n, k, s);
}
constexpr ShiftPair p21{2, 1};
}  // namespace

TEST_CASE("shift pairs") {
  CHECK_NOTHROW(p21.check(3));
  CHECK_THROWS_AS(ShiftPair({1, 1}).check(3), std::invalid_argument);
  CHECK_THROWS_AS(ShiftPair({4, 1}).check(3), std::invalid_argument);
  const auto pairs = lowering_pairs(3);
  REQUIRE(pairs.size() == 3);
  for (const auto& p : pairs) CHECK(p.i > p.j);
}

TEST_CASE("phi moves i to j") {
  CHECK(phi_map(mv(3, "e2^e3"), p21) == mv(3, "e1^e3"));
  CHECK(phi_map(mv(3, "e1^e2"), p21).is_zero());
  CHECK(phi_map(mv(4, "e3^e4"), p21).is_zero());
  // Moving e3 past e2 in e2^e3 -> e2^e1 = -e1^e2.
  CHECK(phi_map(mv(3, "e2^e3"), ShiftPair{3, 1}) == mv(3, "-e1^e2"));
}

TEST_CASE("limit shifts of small subspaces") {
  CHECK(limit_shift(sp(3, 2, {"e2^e3"}), p21) == sp(3, 2, {"e1^e3"}));
  const auto fixed = sp(3, 2, {"e2^e3", "e1^e3"});
  CHECK(limit_shift(fixed, p21) == fixed);
  CHECK(limit_shift(sp(3, 2, {"e1^e2"}), p21) == sp(3, 2, {"e1^e2"}));
  CHECK_THROWS_AS(limit_shift(sp(3, 2, {"e1^e2"}), ShiftPair{5, 1}), std::invalid_argument);
}

TEST_CASE("combinatorial shifts") {
  CHECK(combinatorial_shift(fam(3, 2, {{2, 3}}), p21) == fam(3, 2, {{1, 3}}));
  CHECK(combinatorial_shift(fam(3, 2, {{2, 3}, {1, 3}}), p21) == fam(3, 2, {{2, 3}, {1, 3}}));
  CHECK(combinatorial_shift(fam(3, 2, {{1, 2}}), p21) == fam(3, 2, {{1, 2}}));
  CHECK(is_shifted(fam(3, 2, {{1, 2}, {1, 3}})));
  CHECK_FALSE(is_shifted(fam(3, 2, {{2, 3}})));
  CHECK(is_shifted(SetFamily(3, 2)));
}

TEST_CASE("combinatorial shift matches the textbook definition") {
  RandomSource rng(31);
  for (int t = 0; t < 300; ++t) {
    const int n = rng.uniform_int(2, 6);
    const int k = rng.uniform_int(1, n);
    oracle::Family f;
    for (const auto& a : oracle::k_subsets(n, k))
      if (rng.uniform_int(0, 1)) f.insert(a);
    const SetFamily sf = oracle::to_set_family(n, k, f);
    CHECK(is_shifted(sf) == oracle::shifted(f));
    CHECK(is_intersecting(sf) == oracle::intersecting(f));
    int i = rng.uniform_int(1, n), j = rng.uniform_int(1, n);
    if (i == j) continue;
    const auto shifted = combinatorial_shift(sf, ShiftPair{i, j});
    CHECK(oracle::to_family(shifted) == oracle::comb_shift(f, i, j));
    CHECK(monomial_basis(limit_shift(monomial_span(sf), ShiftPair{i, j})) == shifted);
    // Shifting never breaks the intersecting property.
    if (oracle::intersecting(f)) CHECK(is_intersecting(shifted));
  }
}

TEST_CASE("limit shifts preserve dimension and are idempotent") {
  RandomSource rng(32);
  for (int t = 0; t < 150; ++t) {
    const int n = rng.uniform_int(2, 5);
    const int k = rng.uniform_int(1, n - 1);
    const auto v = rng.subspace(MonomialOrder{OrderKind::lex, n, k}, rng.uniform_int(1, 4));
    const int i = rng.uniform_int(1, n);
    int j = rng.uniform_int(1, n - 1);
    if (j >= i) ++j;
    const auto w = limit_shift(v, ShiftPair{i, j});
    CHECK(w.dim() == v.dim());
    CHECK(limit_shift(w, ShiftPair{i, j}) == w);
    CHECK(finite_t_action(w, ShiftPair{i, j}, rng.nonzero_rational()) == w);
  }
}

TEST_CASE("finite-t action") {
  CHECK(finite_t_action(sp(3, 2, {"e2^e3"}), p21, 5) == sp(3, 2, {"e2^e3 + 5*e1^e3"}));
  const auto v = sp(4, 2, {"e2^e3 + e1^e4", "e3^e4"});
  CHECK(finite_t_action(v, p21, 0) == v);
  CHECK(finite_t_action(sp(3, 2, {"e1^e2"}), p21, 7) == sp(3, 2, {"e1^e2"}));
}

TEST_CASE("Plücker limit oracle") {
  const auto p = pluecker_limit(sp(3, 2, {"e2^e3"}), p21);
  REQUIRE(p.coordinates.size() == 1);
  CHECK(p.monomials(p.leading_key()) == std::vector<IndexSet>{IndexSet{1, 3}});
  const auto fixed = sp(3, 2, {"e2^e3", "e1^e3"});
  CHECK(pluecker_limit(fixed, p21) == pluecker(fixed));
  const auto mono = sp(4, 2, {"e1^e2", "e1^e3"});
  CHECK(pluecker_limit(mono, p21) == pluecker(mono));
}

TEST_CASE("Plücker limit agrees with limit_shift in both orders") {
  RandomSource rng(33);
  for (int t = 0; t < 40; ++t) {
    const int n = rng.uniform_int(3, 5);
    const auto kind = t % 2 ? OrderKind::weight2 : OrderKind::lex;
    const auto v = rng.subspace(MonomialOrder{kind, n, 2}, rng.uniform_int(1, 3));
    if (v.is_zero()) continue;
    for (const auto& p : lowering_pairs(n)) CHECK(pluecker(limit_shift(v, p)) == pluecker_limit(v, p));
  }
}

TEST_CASE("initial subspaces") {
  const auto mono = sp(4, 2, {"e1^e2", "e3^e4"});
  CHECK(init_subspace(mono) == mono);
  CHECK(init_subspace(sp(3, 2, {"e1^e2 + e2^e3"})) == sp(3, 2, {"e1^e2"}));
  CHECK(init_subspace(sp(4, 2, {"e1^e2 + e3^e4", "e1^e2 - e3^e4"})) == mono);
  // The orders disagree on {1,4} versus {2,3}.
  CHECK(init_subspace(sp(4, 2, {"e1^e4 + e2^e3"})) == sp(4, 2, {"e1^e4"}));
  CHECK(init_subspace(sp(4, 2, {"e1^e4 + e2^e3"}, OrderKind::weight2)) == sp(4, 2, {"e2^e3"}, OrderKind::weight2));
}

TEST_CASE("the diagonal limit with weights 2^i selects the weight2 initial subspace") {
  // N(t) = diag(t^-2, t^-4, ..., t^-2^n) scales e_S by t^-(sum of 2^i); the
  // smallest sum dominates as t grows.
  const auto v = sp(4, 2, {"e1^e4 + e2^e3"});
  const auto limit = pluecker_torus_limit(v);
  REQUIRE(limit.coordinates.size() == 1);
  CHECK(limit.monomials(limit.leading_key()) == std::vector<IndexSet>{IndexSet{2, 3}});
  RandomSource rng(34);
  for (int t = 0; t < 60; ++t) {
    const int n = rng.uniform_int(3, 5);
    const auto w = rng.subspace(MonomialOrder{OrderKind::weight2, n, 2}, rng.uniform_int(1, 3));
    if (w.is_zero()) continue;
    CHECK(pluecker_torus_limit(w) == pluecker(init_subspace(w)));
  }
}

TEST_CASE("fixed points of the two routes") {
  const auto star2 = sp(4, 2, {"e2^e3", "e2^e4", "e1^e2"});
  for (const Route route : {Route::iterate, Route::init_then_shift}) {
    const auto r = bn_fixed_point(star2, route);
    CHECK(monomial_basis(r.result) == fam(4, 2, {{1, 2}, {1, 3}, {1, 4}}));
    for (const auto& step : r.trace) CHECK(step.dim == 3);

    const auto shifted = sp(4, 2, {"e1^e2", "e1^e3"});
    const auto same = bn_fixed_point(shifted, route);
    CHECK(same.result == shifted);
    CHECK(same.trace.empty());

    CHECK(bn_fixed_point(sp(3, 2, {"e1^e2 + e2^e3"}), route).result == sp(3, 2, {"e1^e2"}));
  }
  CHECK(parse_route("init-shift") == Route::init_then_shift);
  CHECK(parse_route("iterate") == Route::iterate);
  CHECK_THROWS_AS(parse_route("sideways"), ParseError);
}

TEST_CASE("lowering limits can stall at a non-monomial subspace") {
  // Fixed by every lowering limit shift yet not monomial. It is not
  // self-annihilating: (e1^e4 + e2^e3)^2 = 2 e1^e2^e3^e4.
  const auto v = sp(4, 2, {"e1^e2", "e1^e3", "e1^e4 + e2^e3"});
  for (const auto& p : lowering_pairs(4)) CHECK(limit_shift(v, p) == v);
  CHECK_FALSE(monomial_basis(v));
  CHECK_THROWS_AS(bn_fixed_point(v, Route::iterate), ClaimViolation);
  CHECK(monomial_basis(bn_fixed_point(v, Route::init_then_shift).result) == fam(4, 2, {{1, 2}, {1, 3}, {1, 4}}));
}

TEST_CASE("iteration cap") {
  const auto v = sp(4, 2, {"e3^e4"});
  CHECK_THROWS_AS(bn_fixed_point(v, Route::iterate, 1), NonTermination);
  CHECK(bn_fixed_point(v, Route::iterate, 10).result == sp(4, 2, {"e1^e2"}));
}

TEST_CASE("limits keep self-annihilation") {
  RandomSource rng(35);
  for (int t = 0; t < 60; ++t) {
    const int n = rng.uniform_int(4, 6);
    const int k = 2;
    oracle::Family f;
    for (const auto& a : oracle::k_subsets(n, k))
      if (a.front() <= 2 && rng.uniform_int(0, 1)) f.insert(a);
    if (!oracle::intersecting(f)) continue;
    const auto kind = t % 2 ? OrderKind::weight2 : OrderKind::lex;
    const auto v = transform(rng.invertible(n), monomial_span(oracle::to_set_family(n, k, f), kind));
    const auto check = [](const Subspace& w) {
      for (std::size_t a = 0; a < w.dim(); ++a)
        for (std::size_t b = a; b < w.dim(); ++b) CHECK(oracle::wedge(w.rows()[a], w.rows()[b]).empty());
    };
    check(init_subspace(v));
    for (const auto& p : lowering_pairs(n)) check(limit_shift(v, p));
  }
}
