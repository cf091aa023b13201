#include "extshift/scalar.hpp"

#include <cctype>

#include "extshift/errors.hpp"

namespace extshift {

std::string to_string(const Scalar& x) { return x.get_str(); }

namespace {

bool is_integer_text(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_text(num)) throw ParseError("malformed scalar '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Scalar(parse_integer(num));
  const std::string_view den = text.substr(slash + 1);
  if (!is_integer_text(den) || den.front() == '-' || den.front() == '+') {
    throw ParseError("malformed scalar '" + std::string(text) + "'");
  }
  const mpz_class d = parse_integer(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Scalar q(parse_integer(num), d);
  q.canonicalize();
  return q;
}

}  // namespace extshift
