#include "extshift/limits.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "extshift/errors.hpp"
#include "extshift/poly_scalar.hpp"

namespace extshift {

void ShiftPair::check(int n) const {
  if (i < 1 || j < 1 || i > n || j > n || i == j) {
    throw std::invalid_argument("shift pair " + to_string() + " needs distinct indices in [1," +
                                std::to_string(n) + "]");
  }
}

std::string ShiftPair::to_string() const {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::vector<ShiftPair> lowering_pairs(int n) {
  std::vector<ShiftPair> pairs;
  for (int j = 1; j <= n; ++j)
    for (int i = j + 1; i <= n; ++i) pairs.push_back({i, j});
  return pairs;
}

Multivector phi_map(const Multivector& x, ShiftPair p) {
  p.check(x.n());
  Multivector out(x.n());
  for (const auto& [s, c] : x.terms()) {
    if (!s.contains(p.i)) continue;
    const IndexSet rest = s.without(p.i);
    if (rest.contains(p.j)) continue;
    // e_S = ± e_i ^ e_rest, then e_j ^ e_rest = ± e_{rest ∪ j}.
    const int parity = s.count_below(p.i) + rest.count_below(p.j);
    out.add_term(rest.with(p.j), (parity & 1) ? Scalar(-c) : c);
  }
  return out;
}

Subspace limit_shift(const Subspace& v, ShiftPair p) {
  p.check(v.n());
  const auto phi = [p](const Multivector& x) { return phi_map(x, p); };
  const Subspace image = apply_map(v, phi);
  const Subspace meet = intersect(v, image);

  // Preimage of V ∩ φ(V) inside V: coefficient vectors c with
  // Σ c_a φ(row_a) ∈ span(meet rows), read off a left nullspace.
  const auto& frame = v.frame();
  Matrix stacked;
  for (const auto& row : v.rows()) stacked.append_row(frame.coordinates(phi(row)));
  const Matrix meet_coords = meet.coordinates();
  for (std::size_t r = 0; r < meet_coords.rows(); ++r) stacked.append_row(meet_coords.row(r));

  std::vector<Multivector> preimage;
  if (stacked.rows() > 0) {
    const Matrix relations = nullspace(stacked.transpose());
    for (std::size_t r = 0; r < relations.rows(); ++r) {
      Multivector x(v.n());
      for (std::size_t a = 0; a < v.dim(); ++a) {
        if (!is_zero(relations(r, a))) x += relations(r, a) * v.rows()[a];
      }
      preimage.push_back(std::move(x));
    }
  }
  Subspace result = sum(image, Subspace::span(v.order(), preimage));
  if (result.dim() != v.dim()) {
    throw ClaimViolation("limit_shift " + p.to_string() + " changed dimension " +
                         std::to_string(v.dim()) + " -> " + std::to_string(result.dim()));
  }
  return result;
}

SetFamily combinatorial_shift(const SetFamily& f, ShiftPair p) {
  p.check(f.n());
  std::vector<IndexSet> out;
  out.reserve(f.size());
  for (IndexSet a : f.sets()) {
    if (a.contains(p.i) && !a.contains(p.j)) {
      const IndexSet b = a.without(p.i).with(p.j);
      out.push_back(f.contains(b) ? a : b);
    } else {
      out.push_back(a);
    }
  }
  return SetFamily(f.n(), f.k(), std::move(out));
}

Subspace init_subspace(const Subspace& v) {
  std::vector<Multivector> monomials;
  monomials.reserve(v.dim());
  for (IndexSet s : v.pivots()) monomials.push_back(Multivector::monomial(v.n(), s));
  return Subspace::span(v.order(), monomials);
}

std::string to_string(Route route) {
  return route == Route::iterate ? "iterate" : "init-shift";
}

Route parse_route(std::string_view text) {
  if (text == "iterate") return Route::iterate;
  if (text == "init-shift" || text == "init-then-shift") return Route::init_then_shift;
  throw ParseError("unknown route '" + std::string(text) + "' (expected iterate or init-shift)");
}

std::string to_string(StepKind kind) {
  switch (kind) {
    case StepKind::limit_shift: return "limit_shift";
    case StepKind::comb_shift: return "comb_shift";
    case StepKind::init: return "init";
  }
  return "?";
}

namespace {

std::string rows_to_string(const Subspace& v) {
  std::string text;
  for (const auto& r : v.rows()) text += (text.empty() ? "" : ", ") + r.to_string();
  return text;
}

TraceStep make_step(int step, StepKind kind, std::optional<ShiftPair> pair, const Subspace& state) {
  const auto family = monomial_basis(state);
  return TraceStep{step,         kind, pair, state.dim(), family.has_value(),
                   family && is_shifted(*family), state};
}

FixedPointResult iterate_route(const Subspace& v, int max_rounds) {
  FixedPointResult out{v, {}, 0};
  const auto pairs = lowering_pairs(v.n());
  while (true) {
    if (out.rounds >= max_rounds) {
      throw NonTermination("limit iteration did not stabilize within " +
                           std::to_string(max_rounds) + " rounds");
    }
    ++out.rounds;
    bool changed = false;
    for (const auto& p : pairs) {
      Subspace next = limit_shift(out.result, p);
      if (next == out.result) continue;
      out.result = std::move(next);
      out.trace.push_back(make_step(static_cast<int>(out.trace.size()) + 1, StepKind::limit_shift,
                                    p, out.result));
      changed = true;
    }
    if (!changed) break;
  }
  const auto family = monomial_basis(out.result);
  if (!family || !is_shifted(*family)) {
    throw ClaimViolation(
        "limit iteration stopped at a subspace fixed by every limit shift that is not spanned "
        "by a shifted family of monomials: span{" + rows_to_string(out.result) + "}");
  }
  return out;
}

FixedPointResult init_then_shift_route(const Subspace& v) {
  FixedPointResult out{init_subspace(v), {}, 0};
  if (!(out.result == v)) out.trace.push_back(make_step(1, StepKind::init, std::nullopt, out.result));
  SetFamily family = *monomial_basis(out.result);
  const auto pairs = lowering_pairs(v.n());
  bool changed = true;
  while (changed) {
    changed = false;
    ++out.rounds;
    for (const auto& p : pairs) {
      SetFamily next = combinatorial_shift(family, p);
      if (next == family) continue;
      family = std::move(next);
      out.result = monomial_span(family, v.order().kind);
      out.trace.push_back(make_step(static_cast<int>(out.trace.size()) + 1, StepKind::comb_shift, p,
                                    out.result));
      changed = true;
    }
  }
  return out;
}

}  // namespace

FixedPointResult bn_fixed_point(const Subspace& v, Route route, int max_rounds) {
  if (max_rounds <= 0) max_rounds = 10 * v.n() * v.n();
  return route == Route::iterate ? iterate_route(v, max_rounds) : init_then_shift_route(v);
}

Subspace finite_t_action(const Subspace& v, ShiftPair p, const Scalar& t0) {
  p.check(v.n());
  return transform(LinearMap::elementary(v.n(), p.i, p.j, t0), v);
}

PlueckerVector pluecker_limit(const Subspace& v, ShiftPair p) {
  p.check(v.n());
  if (v.is_zero()) throw std::invalid_argument("Plücker vector of the zero subspace is undefined");
  const int n = v.n();
  const auto& frame = v.frame();

  // M_ij(t) with polynomial entries.
  std::vector<std::vector<PolyScalar>> g(n, std::vector<PolyScalar>(n));
  for (int r = 0; r < n; ++r) g[r][r] = Scalar(1);
  g[p.j - 1][p.i - 1] = PolyScalar::variable();

  // Column of the induced map on grade k: coefficient of e_T in g·e_S is det g[T, S].
  std::map<std::uint64_t, std::vector<PolyScalar>> induced;
  const auto image_of = [&](IndexSet s) -> const std::vector<PolyScalar>& {
    auto [it, inserted] = induced.try_emplace(s.bits());
    if (inserted) {
      const auto cols = s.indices();
      it->second.resize(frame.size());
      for (std::size_t pos = 0; pos < frame.size(); ++pos) {
        const auto rows = frame.monomial(pos).indices();
        std::vector<std::vector<PolyScalar>> block(rows.size(), std::vector<PolyScalar>(cols.size()));
        for (std::size_t a = 0; a < rows.size(); ++a)
          for (std::size_t b = 0; b < cols.size(); ++b) block[a][b] = g[rows[a] - 1][cols[b] - 1];
        it->second[pos] = poly_determinant(block);
      }
    }
    return it->second;
  };

  const std::size_t m = v.dim();
  std::vector<std::vector<PolyScalar>> moved(m, std::vector<PolyScalar>(frame.size()));
  for (std::size_t r = 0; r < m; ++r) {
    for (const auto& [s, c] : v.rows()[r].terms()) {
      const auto& col = image_of(s);
      for (std::size_t pos = 0; pos < frame.size(); ++pos) {
        if (!col[pos].is_zero()) moved[r][pos] += PolyScalar(c) * col[pos];
      }
    }
  }

  std::vector<std::size_t> support;
  for (std::size_t pos = 0; pos < frame.size(); ++pos) {
    for (std::size_t r = 0; r < m; ++r) {
      if (!moved[r][pos].is_zero()) {
        support.push_back(pos);
        break;
      }
    }
  }

  std::map<PlueckerVector::Key, PolyScalar> minors;
  int top = -1;
  std::vector<std::vector<PolyScalar>> block(m, std::vector<PolyScalar>(m));
  for_each_combination(support, m, [&](const std::vector<std::size_t>& cols) {
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) block[r][c] = moved[r][cols[c]];
    PolyScalar d = poly_determinant(block);
    if (d.is_zero()) return;
    top = std::max(top, d.degree());
    minors.emplace(cols, std::move(d));
  });

  std::map<PlueckerVector::Key, Scalar> leading;
  for (const auto& [key, d] : minors) {
    if (d.degree() == top) leading.emplace(key, d.coefficient(top));
  }
  return normalized_pluecker(v.order(), m, std::move(leading));
}

PlueckerVector pluecker_torus_limit(const Subspace& v) {
  const PlueckerVector base = pluecker(v);
  const auto& frame = v.frame();
  // Mask bit i-1 carries 2^{i-1}, half the weight 2^i of index i; halving is harmless.
  std::map<PlueckerVector::Key, mpz_class> weight;
  mpz_class best;
  bool first = true;
  for (const auto& [key, c] : base.coordinates) {
    mpz_class w = 0;
    for (auto pos : key) {
      const std::uint64_t mask = frame.monomial(pos).bits();
      mpz_class bits;
      mpz_import(bits.get_mpz_t(), 1, 1, sizeof mask, 0, 0, &mask);
      w += bits;
    }
    if (first || w < best) best = w;
    first = false;
    weight.emplace(key, std::move(w));
  }
  std::map<PlueckerVector::Key, Scalar> leading;
  for (const auto& [key, c] : base.coordinates) {
    if (weight.at(key) == best) leading.emplace(key, c);
  }
  return normalized_pluecker(v.order(), base.m, std::move(leading));
}

}  // namespace extshift
