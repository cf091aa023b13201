#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "extshift/ekr.hpp"
#include "extshift/factor.hpp"
#include "extshift/limits.hpp"
#include "extshift/pluecker.hpp"
#include "extshift/set_family.hpp"
#include "extshift/subspace.hpp"

namespace extshift::io {

using Json = nlohmann::ordered_json;

/// Parses JSON, also accepting bare identifiers as object keys
/// ({n:4, k:2, sets:[[1,2]]}). Syntax errors carry the line number.
Json parse_json(std::string_view text);

/// {"n", "k", "sets": [[1-based indices]]}, sets in lexicographic order.
Json to_json(const SetFamily& f);
SetFamily family_from_json(const Json& j, std::string_view source_text = {});

/// {"n", "k", "order", "basis": [multivector strings]}; rows in canonical order.
Json to_json(const Subspace& v);
/// Re-canonicalizes the basis; `order_override` replaces the recorded order.
Subspace subspace_from_json(const Json& j, std::string_view source_text = {},
                            std::optional<OrderKind> order_override = std::nullopt);

/// [{"step", "kind", "pair", "dim", "monomial", "shifted"}, ...]
Json to_json(const std::vector<TraceStep>& trace);
Json to_json(const RecursionNode& node);
Json to_json(const VerifyReport& report);
Json to_json(const PlueckerVector& p);
Json to_json(const FactorReport& r);
Json to_json(const std::vector<ProbeRecord>& records);

using Input = std::variant<SetFamily, Subspace, Multivector>;

/// Reads `arg` as a file if one exists at that path, otherwise as literal
/// text. Objects with "sets" are families, objects with "basis" subspaces;
/// anything else must be a multivector, which needs `n`.
Input parse_input(const std::string& arg, std::optional<int> n = std::nullopt,
                  std::optional<OrderKind> order_override = std::nullopt);

/// Inverse of to_json for each value kind, as text.
std::string print(const Input& value);

}  // namespace extshift::io
