#include "extshift/io.hpp"

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "extshift/errors.hpp"

namespace extshift::io {

namespace {

int line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

/// Line on which element `index` of the array stored under `key` starts; 0 if not found.
int element_line(std::string_view text, std::string_view key, std::size_t index) {
  if (text.empty()) return 0;
  const std::regex key_re("\"?" + std::string(key) + "\"?\\s*:\\s*\\[");
  std::match_results<std::string_view::const_iterator> match;
  if (!std::regex_search(text.begin(), text.end(), match, key_re)) return 0;
  std::size_t pos = static_cast<std::size_t>(match.position(0) + match.length(0));
  int depth = 1;
  std::size_t element = 0;
  bool in_string = false;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  if (index == 0) return line_of_offset(text, pos);
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (in_string) {
      if (c == '\\') ++pos;
      else if (c == '"') in_string = false;
      continue;
    }
    if (c == '"') in_string = true;
    else if (c == '[' || c == '{') ++depth;
    else if (c == ']' || c == '}') {
      if (--depth == 0) return 0;
    } else if (c == ',' && depth == 1 && ++element == index) {
      ++pos;
      skip_space();
      return line_of_offset(text, pos);
    }
  }
  return 0;
}

int required_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw ParseError(std::string("missing integer field '") + key + "'");
  }
  return j[key].get<int>();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Json parse_json(std::string_view text) {
  static const std::regex bare_key(R"(([\{,]\s*)([A-Za-z_][A-Za-z0-9_]*)(\s*:))");
  const std::string quoted = std::regex_replace(std::string(text), bare_key, "$1\"$2\"$3");
  try {
    return Json::parse(quoted);
  } catch (const nlohmann::json::parse_error& e) {
    // Quoting keys adds no newlines, so byte offsets map to the same lines.
    throw ParseError(e.what(), line_of_offset(quoted, e.byte == 0 ? 0 : e.byte - 1));
  }
}

Json to_json(const SetFamily& f) {
  Json sets = Json::array();
  for (IndexSet s : f.sets()) sets.push_back(s.indices());
  return Json{{"n", f.n()}, {"k", f.k()}, {"sets", std::move(sets)}};
}

SetFamily family_from_json(const Json& j, std::string_view source_text) {
  if (!j.is_object()) throw ParseError("set family must be an object");
  const int n = required_int(j, "n");
  const int k = required_int(j, "k");
  if (!j.contains("sets") || !j["sets"].is_array()) throw ParseError("missing array field 'sets'");
  std::vector<IndexSet> sets;
  const auto& arr = j["sets"];
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const int line = element_line(source_text, "sets", i);
    try {
      if (!arr[i].is_array()) throw std::invalid_argument("expected an array of indices");
      std::vector<int> idx;
      for (const auto& x : arr[i]) {
        if (!x.is_number_integer()) throw std::invalid_argument("indices must be integers");
        idx.push_back(x.get<int>());
      }
      const IndexSet s = IndexSet::from_indices(idx);
      if (s.size() != k) throw std::invalid_argument("expected " + std::to_string(k) + " indices");
      if (s.max() > n) throw std::invalid_argument("index exceeds n = " + std::to_string(n));
      for (std::size_t prev = 0; prev < sets.size(); ++prev) {
        if (sets[prev] == s) {
          throw std::invalid_argument("duplicate set " + s.to_string() + " (same as set #" +
                                      std::to_string(prev + 1) + ")");
        }
      }
      sets.push_back(s);
    } catch (const ParseError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw ParseError("set #" + std::to_string(i + 1) + ": " + e.what(), line);
    }
  }
  try {
    return SetFamily(n, k, std::move(sets));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const Subspace& v) {
  Json basis = Json::array();
  for (const auto& row : v.rows()) basis.push_back(row.to_string());
  return Json{{"n", v.n()}, {"k", v.k()}, {"order", to_string(v.order().kind)}, {"basis", std::move(basis)}};
}

Subspace subspace_from_json(const Json& j, std::string_view source_text,
                            std::optional<OrderKind> order_override) {
  if (!j.is_object()) throw ParseError("subspace must be an object");
  const int n = required_int(j, "n");
  const int k = required_int(j, "k");
  if (n < 1 || n > kMaxDimension || k < 0 || k > n) throw ParseError("need 0 <= k <= n <= 64");
  OrderKind kind = OrderKind::lex;
  if (j.contains("order")) {
    if (!j["order"].is_string()) throw ParseError("'order' must be a string");
    kind = parse_order_kind(j["order"].get<std::string>());
  }
  if (order_override) kind = *order_override;
  if (!j.contains("basis") || !j["basis"].is_array()) throw ParseError("missing array field 'basis'");
  std::vector<Multivector> rows;
  const auto& arr = j["basis"];
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const int line = element_line(source_text, "basis", i);
    try {
      if (!arr[i].is_string()) throw std::invalid_argument("expected a multivector string");
      Multivector x = Multivector::parse(n, arr[i].get<std::string>());
      if (!x.is_zero() && x.grade() != k) {
        throw std::invalid_argument("'" + x.to_string() + "' is not homogeneous of grade " +
                                    std::to_string(k));
      }
      rows.push_back(std::move(x));
    } catch (const std::invalid_argument& e) {
      throw ParseError("basis element #" + std::to_string(i + 1) + ": " + e.what(), line);
    }
  }
  return Subspace::span(MonomialOrder{kind, n, k}, rows);
}

Json to_json(const std::vector<TraceStep>& trace) {
  Json out = Json::array();
  for (const auto& s : trace) {
    Json pair = s.pair ? Json::array({s.pair->i, s.pair->j}) : Json(nullptr);
    out.push_back(Json{{"step", s.step},
                       {"kind", to_string(s.kind)},
                       {"pair", std::move(pair)},
                       {"dim", s.dim},
                       {"monomial", s.monomial},
                       {"shifted", s.shifted}});
  }
  return out;
}

Json to_json(const RecursionNode& node) {
  Json j{{"n", node.n},       {"k", node.k},       {"size", node.size},
         {"bound", node.bound}, {"rule", to_string(node.rule)}, {"satisfied", node.satisfied}};
  if (!node.children.empty()) {
    j["link"] = to_json(node.children[0]);
    j["del"] = to_json(node.children[1]);
  }
  return j;
}

Json to_json(const VerifyReport& r) {
  Json j{{"subject", r.subject},
         {"size", r.size},
         {"bound", r.bound},
         {"satisfied", r.satisfied},
         {"summary", r.summary()},
         {"star_element", r.star_element ? Json(*r.star_element) : Json(nullptr)}};
  if (r.family) j["family"] = to_json(*r.family);
  if (r.recursion) {
    j["recursion_depth"] = r.recursion->depth();
    j["recursion"] = to_json(*r.recursion);
  }
  if (!r.trace.empty()) j["trace"] = to_json(r.trace);
  if (r.families_examined > 0) j["families_examined"] = r.families_examined;
  if (!r.witnesses.empty()) {
    Json w = Json::array();
    for (const auto& f : r.witnesses) w.push_back(to_json(f)["sets"]);
    j["witnesses"] = std::move(w);
  }
  return j;
}

Json to_json(const PlueckerVector& p) {
  Json coords = Json::array();
  for (const auto& [key, c] : p.coordinates) {
    Json monos = Json::array();
    for (IndexSet s : p.monomials(key)) monos.push_back(Monomial{p.order.n, s}.to_string());
    coords.push_back(Json{{"monomials", std::move(monos)}, {"value", to_string(c)}});
  }
  return Json{{"order", to_string(p.order.kind)}, {"m", p.m}, {"coordinates", std::move(coords)}};
}

Json to_json(const FactorReport& r) {
  Json cof = Json::array();
  for (const auto& w : r.cofactors) cof.push_back(w.to_string());
  Json factors = Json::array();
  for (const auto& a : r.factor_space.rows()) factors.push_back(a.to_string());
  return Json{{"element", r.element.to_string()},
              {"factor_dim", r.factor_space.dim()},
              {"factor_space", std::move(factors)},
              {"decomposable", r.decomposable},
              {"cofactors", std::move(cof)}};
}

Json to_json(const std::vector<ProbeRecord>& records) {
  Json out = Json::array();
  for (const auto& r : records) {
    out.push_back(Json{{"family", r.label},
                       {"size", r.size},
                       {"star", r.star},
                       {"annihilator_dim", r.annihilator_dim},
                       {"transformed", r.transformed}});
  }
  return out;
}

Input parse_input(const std::string& arg, std::optional<int> n, std::optional<OrderKind> order_override) {
  std::string text = arg;
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) text = read_file(arg);

  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    const Json j = parse_json(text);
    if (j.contains("sets")) return family_from_json(j, text);
    if (j.contains("basis")) return subspace_from_json(j, text, order_override);
    throw ParseError("object has neither 'sets' nor 'basis'");
  }
  if (!n) throw ParseError("a multivector literal needs the ground dimension (--n)");
  return Multivector::parse(*n, text);
}

std::string print(const Input& value) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Multivector>) {
          return x.to_string();
        } else {
          return to_json(x).dump();
        }
      },
      value);
}

}  // namespace extshift::io
