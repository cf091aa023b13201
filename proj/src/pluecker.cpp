#include "extshift/pluecker.hpp"

#include <stdexcept>

namespace extshift {

std::vector<IndexSet> PlueckerVector::monomials(const Key& key) const {
  const auto frame = frame_for(order);
  std::vector<IndexSet> out;
  out.reserve(key.size());
  for (auto pos : key) out.push_back(frame->monomial(pos));
  return out;
}

std::string PlueckerVector::to_string() const {
  std::string s;
  for (const auto& [key, c] : coordinates) {
    if (!s.empty()) s += ", ";
    s += extshift::to_string(c) + " @ [";
    bool first = true;
    for (IndexSet mono : monomials(key)) {
      if (!first) s += ' ';
      s += Monomial{order.n, mono}.to_string();
      first = false;
    }
    s += ']';
  }
  return "(" + s + ")";
}

PlueckerVector normalized_pluecker(const MonomialOrder& order, std::size_t m,
                                   std::map<PlueckerVector::Key, Scalar> raw) {
  std::erase_if(raw, [](const auto& kv) { return is_zero(kv.second); });
  if (raw.empty()) throw std::invalid_argument("Plücker vector is identically zero");
  const Scalar scale = 1 / raw.begin()->second;
  for (auto& [key, c] : raw) c *= scale;
  return PlueckerVector{order, m, std::move(raw)};
}

PlueckerVector pluecker_of_rows(const MonomialOrder& order, const Matrix& rows) {
  const std::size_t m = rows.rows();
  if (m == 0) throw std::invalid_argument("Plücker vector of the zero subspace is undefined");
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < rows.cols(); ++c) {
    for (std::size_t r = 0; r < m; ++r) {
      if (!is_zero(rows(r, c))) {
        support.push_back(c);
        break;
      }
    }
  }
  std::map<PlueckerVector::Key, Scalar> raw;
  Matrix minor(m, m);
  for_each_combination(support, m, [&](const std::vector<std::size_t>& cols) {
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) minor(r, c) = rows(r, cols[c]);
    Scalar d = determinant(minor);
    if (!is_zero(d)) raw.emplace(cols, std::move(d));
  });
  return normalized_pluecker(order, m, std::move(raw));
}

PlueckerVector pluecker(const Subspace& v) { return pluecker_of_rows(v.order(), v.coordinates()); }

}  // namespace extshift
