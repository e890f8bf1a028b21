#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "arr/arrangement.hpp"

namespace arr {

/// Named arrangements: braid, x3, x2, nonpappus, pappus, split_solvable, graphic.
///   braid:        [n], n >= 3 (default 3)
///   split_solvable: [m1, ..., mr], r >= 1, each mi >= 2
///   graphic:      flattened edge list [u1, v1, u2, v2, ...]
/// Throws CatalogError on unknown names or bad parameters.
Arrangement builtin(std::string_view name, const std::vector<std::int64_t>& params = {});

/// Defining polynomial text for the fixed catalog entries (x3, x2, ...).
std::string builtin_polynomial(std::string_view name);

/// Names understood by builtin().
const std::vector<std::string>& builtin_names();

}  // namespace arr
