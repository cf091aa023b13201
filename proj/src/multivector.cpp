#include "extshift/multivector.hpp"

#include <cctype>

#include "extshift/errors.hpp"

namespace extshift {

namespace {

void check_same_n(int a, int b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": ground dimensions " + std::to_string(a) +
                            " and " + std::to_string(b) + " differ");
  }
}

void check_dimension(int n) {
  if (n < 0 || n > kMaxDimension) {
    throw std::invalid_argument("ground dimension " + std::to_string(n) + " out of range");
  }
}

}  // namespace

std::string Monomial::to_string() const {
  if (support.empty()) return "1";
  std::string s;
  for (int i : support.indices()) {
    if (!s.empty()) s += '^';
    s += 'e' + std::to_string(i);
  }
  return s;
}

int merge_sign(IndexSet a, IndexSet b) {
  int inversions = 0;
  for (int y : b.indices()) inversions += a.size() - a.count_below(y);
  return (inversions & 1) ? -1 : 1;
}

Multivector::Multivector(int n) : n_(n) { check_dimension(n); }

Multivector::Multivector(int n, const Terms& terms) : n_(n) {
  check_dimension(n);
  for (const auto& [s, c] : terms) add_term(s, c);
}

Multivector Multivector::monomial(int n, IndexSet support, const Scalar& coefficient) {
  Multivector m(n);
  m.add_term(support, coefficient);
  return m;
}

Multivector Multivector::basis_vector(int n, int i) { return monomial(n, IndexSet{i}); }

void Multivector::add_term(IndexSet support, const Scalar& c) {
  if (support.max() > n_) {
    throw DimensionMismatch("monomial " + support.to_string() + " exceeds ground dimension " +
                            std::to_string(n_));
  }
  if (extshift::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(support, c);
  if (!inserted) {
    it->second += c;
    if (extshift::is_zero(it->second)) terms_.erase(it);
  }
}

std::set<int> Multivector::grades() const {
  std::set<int> g;
  for (const auto& [s, c] : terms_) g.insert(s.size());
  return g;
}

int Multivector::grade() const {
  const auto g = grades();
  return g.size() == 1 ? *g.begin() : -1;
}

Scalar Multivector::coefficient(IndexSet support) const {
  auto it = terms_.find(support);
  return it == terms_.end() ? Scalar(0) : it->second;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  check_same_n(n_, o.n_, "sum");
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  check_same_n(n_, o.n_, "difference");
  for (const auto& [s, c] : o.terms_) add_term(s, -c);
  return *this;
}

Multivector& Multivector::operator*=(const Scalar& c) {
  if (extshift::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, v] : terms_) v *= c;
  return *this;
}

Multivector Multivector::operator-() const {
  Multivector r = *this;
  for (auto& [s, v] : r.terms_) v = -v;
  return r;
}

std::string Multivector::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    const Scalar mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += '-';
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    const std::string mono = Monomial{n_, s}.to_string();
    if (s.empty()) {
      out += extshift::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += extshift::to_string(mag) + '*' + mono;
    }
  }
  return out;
}

namespace {

class TermParser {
 public:
  TermParser(int n, std::string_view text) : n_(n), text_(text) {}

  Multivector run() {
    Multivector result(n_);
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty multivector");
    bool first = true;
    while (true) {
      skip_space();
      if (pos_ == text_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      parse_term(result, sign);
    }
    return result;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at column " + std::to_string(pos_ + 1) + " in '" +
                     std::string(text_) + "'");
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void parse_term(Multivector& acc, int sign) {
    Scalar coeff = sign;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      if (peek() == '/') {
        ++pos_;
        const std::string den = digits();
        if (den.empty()) fail("missing denominator");
        num += '/' + den;
      }
      coeff *= parse_scalar(num);
      have_coeff = true;
      skip_space();
      if (peek() != '*') {
        acc.add_term(IndexSet{}, coeff);
        return;
      }
      ++pos_;
      skip_space();
    }
    if (peek() != 'e') fail(have_coeff ? "expected monomial after '*'" : "expected term");
    IndexSet support;
    int parity = 0;
    bool vanishes = false;
    while (true) {
      if (peek() != 'e') fail("expected 'e<index>'");
      ++pos_;
      const std::string idx = digits();
      if (idx.empty() || idx.size() > 3) fail("malformed index");
      const int i = std::stoi(idx);
      if (i < 1 || i > n_) fail("index " + idx + " outside [1," + std::to_string(n_) + "]");
      if (support.contains(i)) {
        vanishes = true;
      } else {
        parity += support.size() - support.count_below(i);
        support = support.with(i);
      }
      skip_space();
      if (peek() != '^') break;
      ++pos_;
      skip_space();
    }
    if (!vanishes) acc.add_term(support, (parity & 1) ? Scalar(-coeff) : coeff);
  }

  int n_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Multivector Multivector::parse(int n, std::string_view text) { return TermParser(n, text).run(); }

Multivector linear_combine(int n, const std::vector<std::pair<Scalar, Multivector>>& pairs) {
  Multivector acc(n);
  for (const auto& [c, x] : pairs) {
    check_same_n(n, x.n(), "linear_combine");
    for (const auto& [s, v] : x.terms()) acc.add_term(s, c * v);
  }
  return acc;
}

Multivector wedge(const Multivector& x, const Multivector& y) {
  check_same_n(x.n(), y.n(), "wedge");
  Multivector out(x.n());
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      if (a.intersects(b)) continue;
      Scalar c = ca * cb;
      if (merge_sign(a, b) < 0) c = -c;
      out.add_term(a | b, c);
    }
  }
  return out;
}

}  // namespace extshift
