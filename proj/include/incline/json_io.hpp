#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "incline/incline.hpp"
#include "incline/matrix.hpp"
#include "incline/walk.hpp"

namespace incline {

using Json = nlohmann::ordered_json;

// {"kind":"boolean"} | {"kind":"fuzzy","tnorm":...} | {"kind":"tropical"} |
// {"kind":"table","elements":[...],"add":[[...]],"mul":[[...]]}.
// Throws InputError on malformed documents.
InclineSpec incline_spec_from_json(const Json& doc);
Json to_json(const InclineSpec& spec);

// "boolean", "tropical", "fuzzy-<tnorm>" or "fuzzy(<tnorm>)".
std::optional<InclineSpec> builtin_incline_spec(std::string_view name);

// Booleans as 0/1; rationals as "p/q" strings ("p" when integral);
// infinity as "inf"; table elements by label.
Json element_to_json(const Incline& incline, const Element& a);
// Also accepts JSON numbers, true/false, and table indices.
Element element_from_json(const Incline& incline, const Json& value);

// {"incline": <spec, builtin name or path>, "n": N, "entries": [[...], ...]}.
// A string "incline" that is not a builtin name is a path resolved against
// base_dir. Requires n >= 2.
Matrix matrix_from_json(const Json& doc, const std::filesystem::path& base_dir = {});
Json to_json(const Matrix& a);

Json to_json(const ValidationReport& report);
Json to_json(const OrderReport& report);
// elapsed_ms is included only when with_timing is set, so reports are
// reproducible byte for byte by default.
Json to_json(const VerificationReport& report, bool with_timing = false);

Json read_json_file(const std::filesystem::path& path);

}  // namespace incline
