#include "extshift/ekr.hpp"

#include <algorithm>

#include "extshift/enumerate.hpp"
#include "extshift/errors.hpp"

namespace extshift {

Decomposition family_decompose(const SetFamily& f, int v) {
  if (v < 1 || v > f.n()) {
    throw std::invalid_argument("decomposition vertex " + std::to_string(v) + " outside [1," +
                                std::to_string(f.n()) + "]");
  }
  std::vector<IndexSet> star, del, link;
  for (IndexSet s : f.sets()) {
    if (s.contains(v)) {
      star.push_back(s);
      link.push_back(s.without(v));
    } else {
      del.push_back(s);
    }
  }
  const int link_k = std::max(f.k() - 1, 0);
  return {SetFamily(f.n(), f.k(), std::move(star)), SetFamily(f.n(), f.k(), std::move(del)),
          SetFamily(f.n(), link_k, std::move(link))};
}

std::uint64_t ekr_bound(int n, int k) {
  if (k < 1 || 2 * k > n) {
    throw PreconditionError(PreconditionError::Reason::bad_parameters,
                            "ekr_bound needs 1 <= k <= n/2 (got n=" + std::to_string(n) +
                                ", k=" + std::to_string(k) + ")");
  }
  return binomial(n - 1, k - 1);
}

std::uint64_t hm_bound(int n, int k) {
  if (k < 2 || 2 * k > n) {
    throw PreconditionError(PreconditionError::Reason::bad_parameters,
                            "hm_bound needs 2 <= k <= n/2 (got n=" + std::to_string(n) +
                                ", k=" + std::to_string(k) + ")");
  }
  return binomial(n - 1, k - 1) - binomial(n - k - 1, k - 1) + 1;
}

std::optional<int> is_star(const SetFamily& f) {
  if (f.empty()) return std::nullopt;
  IndexSet common = IndexSet::full(f.n());
  for (IndexSet s : f.sets()) common = common & s;
  if (common.empty()) return std::nullopt;
  return common.min();
}

namespace {

bool wedges_vanish(const std::vector<Multivector>& rows, const Multivector& partial,
                   std::size_t first, int remaining) {
  if (remaining == 0) return partial.is_zero();
  for (std::size_t r = first; r < rows.size(); ++r) {
    const Multivector next = wedge(partial, rows[r]);
    // Once a partial product vanishes, every extension of it does too.
    if (next.is_zero()) continue;
    if (!wedges_vanish(rows, next, r, remaining - 1)) return false;
  }
  return true;
}

}  // namespace

bool self_annihilating(const Subspace& v, int s) {
  if (s < 2) throw std::invalid_argument("self_annihilating needs s >= 2");
  return wedges_vanish(v.rows(), Multivector::monomial(v.n(), IndexSet{}), 0, s);
}

int RecursionNode::depth() const {
  int d = 0;
  for (const auto& c : children) d = std::max(d, c.depth() + 1);
  return d;
}

std::string to_string(RecursionNode::Rule rule) {
  switch (rule) {
    case RecursionNode::Rule::single_element: return "k=1";
    case RecursionNode::Rule::complement_pairs: return "k=n/2";
    case RecursionNode::Rule::split: return "split";
  }
  return "?";
}

std::string VerifyReport::summary() const {
  return "size " + std::to_string(size) + (satisfied ? " <= " : " > ") + "bound " +
         std::to_string(bound);
}

namespace {

SetFamily restrict_to_prefix(const SetFamily& f, int n, int k) {
  return SetFamily(n, k, f.sets());
}

RecursionNode verify_node(const SetFamily& f) {
  const int n = f.n();
  const int k = f.k();
  RecursionNode node;
  node.n = n;
  node.k = k;
  node.size = f.size();
  node.bound = binomial(n - 1, k - 1);

  if (k == 1) {
    node.rule = RecursionNode::Rule::single_element;
  } else if (2 * k == n) {
    node.rule = RecursionNode::Rule::complement_pairs;
    node.bound = binomial(n, k) / 2;
    for (IndexSet s : f.sets()) {
      if (f.contains(s.complement(n))) {
        throw ClaimViolation("complementary sets " + s.to_string() + " and " +
                             s.complement(n).to_string() + " in an intersecting family");
      }
    }
  } else {
    node.rule = RecursionNode::Rule::split;
    const auto parts = family_decompose(f, n);
    const SetFamily link = restrict_to_prefix(parts.link, n - 1, k - 1);
    const SetFamily del = restrict_to_prefix(parts.del, n - 1, k);
    if (!is_intersecting(link)) {
      throw ClaimViolation("link at " + std::to_string(n) + " of " + f.to_string() +
                           " is not intersecting");
    }
    if (!is_intersecting(del)) {
      throw ClaimViolation("deletion at " + std::to_string(n) + " of " + f.to_string() +
                           " is not intersecting");
    }
    if (!is_shifted(link) || !is_shifted(del)) {
      throw ClaimViolation("link or deletion at " + std::to_string(n) + " of " + f.to_string() +
                           " is not shifted");
    }
    node.children.push_back(verify_node(link));
    node.children.push_back(verify_node(del));
    if (binomial(n - 2, k - 2) + binomial(n - 2, k - 1) != node.bound) {
      throw ClaimViolation("Pascal identity failed at n=" + std::to_string(n));
    }
  }
  node.satisfied = node.size <= node.bound &&
                   std::all_of(node.children.begin(), node.children.end(),
                               [](const RecursionNode& c) { return c.satisfied; });
  return node;
}

void check_family_preconditions(const SetFamily& f) {
  using Reason = PreconditionError::Reason;
  if (f.k() < 1 || 2 * f.k() > f.n()) {
    throw PreconditionError(Reason::k_too_large, "need 1 <= k <= n/2 (got n=" +
                                                     std::to_string(f.n()) + ", k=" +
                                                     std::to_string(f.k()) + ")");
  }
  if (!is_shifted(f)) throw PreconditionError(Reason::not_shifted, "family is not shifted");
  if (!is_intersecting(f)) {
    throw PreconditionError(Reason::not_intersecting, "family is not intersecting");
  }
}

}  // namespace

VerifyReport shifted_ekr_verify(const SetFamily& f) {
  check_family_preconditions(f);
  VerifyReport report;
  report.subject = "family " + f.to_string();
  report.size = f.size();
  report.bound = ekr_bound(f.n(), f.k());
  report.recursion = verify_node(f);
  report.satisfied = report.size <= report.bound && report.recursion->satisfied;
  report.star_element = is_star(f);
  report.family = f;
  return report;
}

VerifyReport ekr_pipeline(const Subspace& v, Route route) {
  using Reason = PreconditionError::Reason;
  if (v.k() < 1 || 2 * v.k() > v.n()) {
    throw PreconditionError(Reason::k_too_large, "need 1 <= k <= n/2 (got n=" +
                                                     std::to_string(v.n()) + ", k=" +
                                                     std::to_string(v.k()) + ")");
  }
  if (!self_annihilating(v)) {
    throw PreconditionError(Reason::not_self_annihilating, "subspace is not self-annihilating");
  }
  FixedPointResult fixed = bn_fixed_point(v, route);
  for (const auto& step : fixed.trace) {
    if (step.dim != v.dim()) {
      throw ClaimViolation("step " + std::to_string(step.step) + " changed the dimension");
    }
    if (!self_annihilating(step.state)) {
      throw ClaimViolation("step " + std::to_string(step.step) + " lost self-annihilation");
    }
  }
  const auto family = monomial_basis(fixed.result);
  if (!family) throw ClaimViolation("fixed point has no monomial basis");
  if (!is_shifted(*family)) throw ClaimViolation("fixed point family is not shifted");
  if (!is_intersecting(*family)) throw ClaimViolation("fixed point family is not intersecting");

  VerifyReport inner = shifted_ekr_verify(*family);
  inner.subject = "subspace of dimension " + std::to_string(v.dim()) + " (route " +
                  to_string(route) + ")";
  inner.size = v.dim();
  inner.satisfied = inner.size <= inner.bound && inner.recursion->satisfied;
  inner.trace = std::move(fixed.trace);
  return inner;
}

VerifyReport hilton_milner_verify(int n, int k, std::uint64_t budget) {
  VerifyReport report;
  report.subject = "non-star shifted intersecting families, n=" + std::to_string(n) +
                   ", k=" + std::to_string(k);
  report.bound = hm_bound(n, k);
  report.families_examined = enumerate_families(
      n, k, EnumerationMode::shifted_intersecting,
      [&](const SetFamily& f) {
        if (f.empty() || is_star(f)) return;
        if (f.size() > report.size) {
          report.size = f.size();
          report.witnesses.clear();
        }
        if (f.size() == report.size) report.witnesses.push_back(f);
      },
      budget);
  report.satisfied = report.size <= report.bound;
  return report;
}

}  // namespace extshift
