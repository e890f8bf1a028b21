#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "arr/arrangement.hpp"

namespace arr {

/// Reads an arrangement from either a product of linear forms such as
/// "xyz(x+y)(x-2z)" (optionally preceded by a "vars: x, y, z" header line) or a
/// JSON document: a bare matrix of normals, or an object with "normals" and
/// optional "variables" / "labels". Rational entries may be strings "p/q".
Arrangement parse_arrangement(std::string_view text);

/// Textual linear form, e.g. "x+2y-z/3".
std::string format_linear_form(const Normal& normal, const std::vector<std::string>& variables);

nlohmann::json to_json(const Arrangement& a);
nlohmann::json to_json(const L2Lattice& l2);
nlohmann::json to_json(const Flat2& f);

}  // namespace arr
