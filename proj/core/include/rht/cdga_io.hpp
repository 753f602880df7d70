#pragma once

// JSON documents for CDGAs:
//   {"kind": "free",   "label": ..., "generators": [{"name", "degree"}...],
//    "differential": {"x1": "e2^2", ...}}
//   {"kind": "finite", "label": ..., "basis": [{"name", "degree"}...],
//    "differential": {...}, "products": [["a", "a", "a2"], ...]}
//   {"kind": "relative", "label": ..., "base": <finite document>,
//    "fiber": [{"name", "degree"}...], "differential": {...}}
// Expressions use the gca grammar. Serialization is canonical, so
// parse -> serialize -> parse is the identity and serialize is a fixed point.

#include "rht/relative_model.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <variant>

namespace rht {

using Json = nlohmann::ordered_json;
using CdgaValue = std::variant<FreeCdga, FiniteCdga, RelativeModel>;

Json to_json(const FreeCdga& c);
Json to_json(const FiniteCdga& c);
Json to_json(const RelativeModel& c);
Json to_json(const CdgaValue& c);

/// `pointer` is the JSON pointer of `doc` inside an enclosing document, used
/// in error messages. Throws ParseError carrying the offending field.
CdgaValue cdga_from_json(const Json& doc, const std::string& pointer = "");
FiniteCdga finite_from_json(const Json& doc, const std::string& pointer = "");

/// Parses text; syntax errors report line and column.
Json parse_json_text(std::string_view text);
CdgaValue parse_cdga(std::string_view text);
std::string serialize(const CdgaValue& c);

/// Reads a whole file; throws ParseError if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace rht
