#include "extshift/enumerate.hpp"

#include <stdexcept>

#include "extshift/errors.hpp"

namespace extshift {

std::string to_string(EnumerationMode mode) {
  switch (mode) {
    case EnumerationMode::all_intersecting: return "all_intersecting";
    case EnumerationMode::shifted_intersecting: return "shifted_intersecting";
    case EnumerationMode::maximal_intersecting: return "maximal_intersecting";
  }
  return "?";
}

EnumerationMode parse_enumeration_mode(std::string_view text) {
  if (text == "all_intersecting" || text == "all") return EnumerationMode::all_intersecting;
  if (text == "shifted_intersecting" || text == "shifted") return EnumerationMode::shifted_intersecting;
  if (text == "maximal_intersecting" || text == "maximal") return EnumerationMode::maximal_intersecting;
  throw ParseError("unknown enumeration mode '" + std::string(text) + "'");
}

namespace {

/// Fixed-width bitset over the vertex ids of one search.
class VertexSet {
 public:
  explicit VertexSet(std::size_t size) : words_((size + 63) / 64, 0) {}

  void set(std::size_t v) { words_[v / 64] |= std::uint64_t{1} << (v % 64); }
  void reset(std::size_t v) { words_[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }
  bool test(std::size_t v) const { return (words_[v / 64] >> (v % 64)) & 1u; }
  VertexSet operator&(const VertexSet& o) const {
    VertexSet r = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] &= o.words_[w];
    return r;
  }
  /// True iff every element of *this is also in `o`.
  bool subset_of(const VertexSet& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

class FamilySearch {
 public:
  FamilySearch(int n, int k, EnumerationMode mode, const std::function<void(const SetFamily&)>& visit,
               std::uint64_t budget)
      : n_(n), k_(k), mode_(mode), visit_(visit), budget_(budget), vertices_(k_subsets(n, k)) {
    const std::size_t count = vertices_.size();
    compatible_.assign(count, VertexSet(count));
    for (std::size_t a = 0; a < count; ++a)
      for (std::size_t b = 0; b < count; ++b)
        if (vertices_[a].intersects(vertices_[b])) compatible_[a].set(b);

    if (mode_ == EnumerationMode::shifted_intersecting) {
      // Lower covers in the shift order: lower one element by one step.
      covers_.resize(count);
      for (std::size_t v = 0; v < count; ++v) {
        const IndexSet s = vertices_[v];
        for (int a : s.indices()) {
          if (a == 1 || s.contains(a - 1)) continue;
          const IndexSet lower = s.without(a).with(a - 1);
          for (std::size_t u = 0; u < v; ++u)
            if (vertices_[u] == lower) covers_[v].push_back(u);
        }
      }
    }
  }

  std::uint64_t run() {
    VertexSet everything(vertices_.size());
    for (std::size_t v = 0; v < vertices_.size(); ++v) everything.set(v);
    VertexSet chosen(vertices_.size());
    extend(everything, chosen, 0);
    return emitted_;
  }

 private:
  void extend(const VertexSet& allowed, VertexSet& chosen, std::size_t next) {
    if (++visited_ > budget_) {
      throw BudgetExceeded("enumeration of " + to_string(mode_) + " families at n=" +
                           std::to_string(n_) + ", k=" + std::to_string(k_) +
                           " exceeded the budget of " + std::to_string(budget_) + " nodes");
    }
    if (mode_ != EnumerationMode::maximal_intersecting || allowed.subset_of(chosen)) {
      std::vector<IndexSet> sets;
      sets.reserve(path_.size());
      for (auto v : path_) sets.push_back(vertices_[v]);
      visit_(SetFamily(n_, k_, std::move(sets)));
      ++emitted_;
    }
    for (std::size_t v = next; v < vertices_.size(); ++v) {
      if (!allowed.test(v)) continue;
      if (mode_ == EnumerationMode::shifted_intersecting && !covers_chosen(v, chosen)) continue;
      chosen.set(v);
      path_.push_back(v);
      extend(allowed & compatible_[v], chosen, v + 1);
      path_.pop_back();
      chosen.reset(v);
    }
  }

  bool covers_chosen(std::size_t v, const VertexSet& chosen) const {
    for (auto u : covers_[v])
      if (!chosen.test(u)) return false;
    return true;
  }

  int n_;
  int k_;
  EnumerationMode mode_;
  const std::function<void(const SetFamily&)>& visit_;
  std::uint64_t budget_;
  std::vector<IndexSet> vertices_;
  std::vector<VertexSet> compatible_;
  std::vector<std::vector<std::size_t>> covers_;
  std::vector<std::size_t> path_;
  std::uint64_t visited_ = 0;
  std::uint64_t emitted_ = 0;
};

}  // namespace

std::uint64_t enumerate_families(int n, int k, EnumerationMode mode,
                                 const std::function<void(const SetFamily&)>& visit,
                                 std::uint64_t budget) {
  if (n < 1 || n > kMaxDimension || k < 1 || k > n) {
    throw std::invalid_argument("enumerate_families needs 1 <= k <= n");
  }
  if (binomial(n, k) > 4096) {
    throw BudgetExceeded("C(" + std::to_string(n) + "," + std::to_string(k) +
                         ") k-sets is beyond desk scale");
  }
  return FamilySearch(n, k, mode, visit, budget).run();
}

std::vector<SetFamily> collect_families(int n, int k, EnumerationMode mode, std::uint64_t budget) {
  std::vector<SetFamily> out;
  enumerate_families(n, k, mode, [&](const SetFamily& f) { out.push_back(f); }, budget);
  return out;
}

}  // namespace extshift
