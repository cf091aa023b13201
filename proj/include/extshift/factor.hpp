#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "extshift/multivector.hpp"
#include "extshift/random.hpp"
#include "extshift/set_family.hpp"
#include "extshift/subspace.hpp"

namespace extshift {

/// {a ∈ grade 1 : a ^ v = 0}, the linear factors of v. Throws
/// std::invalid_argument for v = 0 (every vector divides it) or inhomogeneous v.
Subspace linear_factors(const Multivector& v);

/// w with a ^ w = v, for a nonzero linear factor a of v. The basis change
/// that replaces e_p (p = first nonzero coordinate of a) by a turns a into
/// e_p; there the cofactor is read off the monomials containing p.
Multivector extract_cofactor(const Multivector& v, const Multivector& a);

struct FactorReport {
  Multivector element;
  Subspace factor_space;
  bool decomposable = false;
  /// Cofactor of each basis vector of factor_space, in row order.
  std::vector<Multivector> cofactors;
};

FactorReport factor_report(const Multivector& v);

/// Common linear factors of every element of V; the whole grade-1 space for V = 0.
Subspace common_annihilator(const Subspace& v);

/// The spanning elements m_A + m_{A^c}, A a k-subset of [2k] containing 1.
std::vector<Multivector> cross_example_generators(int k);

/// Span of cross_example_generators(k), k odd and at least 3. The construction
/// re-checks its guarantees (dimension C(2k-1, k-1), self-annihilation, no
/// generator with a linear factor, zero common annihilator) and throws
/// ClaimViolation if any fails.
Subspace cross_example(int k);

struct ProbeRecord {
  std::string label;
  std::size_t size = 0;
  bool star = false;
  std::size_t annihilator_dim = 0;
  bool transformed = false;
};

/// Record for one subspace. Without an explicit `star`, it says whether the
/// monomials occurring in V's rows all share an index.
ProbeRecord probe_subspace(const Subspace& v, const std::string& label, bool transformed,
                           std::optional<bool> star = std::nullopt);

struct ProbeOptions {
  std::optional<std::size_t> dim_floor;  ///< default hm_bound(n, k)
  std::uint64_t budget = 10'000'000;
  int samples = 2;  ///< random invertible images per family
  std::uint64_t seed = 1;
};

/// Data table over shifted intersecting families larger than the floor and
/// random invertible images of their spans.
std::vector<ProbeRecord> hm_probe(int n, int k, const ProbeOptions& options = {});

}  // namespace extshift
