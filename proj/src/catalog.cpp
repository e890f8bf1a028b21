#include "arr/catalog.hpp"

#include <algorithm>

#include "arr/errors.hpp"
#include "arr/parse.hpp"

namespace arr {

namespace {

struct Entry {
  const char* name;
  const char* polynomial;
};

// Fixed realizations, hyperplanes in factor order.
constexpr Entry fixed_entries[] = {
    {"braid3", "(x+y)(x-y)(x+z)(x-z)(y+z)(y-z)"},
    {"x3", "xyz(x+y)(x+z)(y+z)"},
    {"x2", "xyz(y-z)(x-z)(x+y)(x+y-2z)"},
    {"nonpappus", "xyz(x+y)(y+z)(x+3z)(x+2y+z)(x+2y+3z)(2x+3y+3z)"},
    // (9_3)_1 configuration with nine triple points.
    {"pappus", "xyz(x-y)(y-z)(x-y-z)(2x+y+z)(2x+y-z)(-2x+5y-z)"},
};

void require_no_params(std::string_view name, const std::vector<std::int64_t>& params) {
  if (!params.empty()) throw CatalogError("builtin '" + std::string(name) + "' takes no parameters");
}

Arrangement split_solvable(const std::vector<std::int64_t>& m) {
  if (m.empty()) throw CatalogError("split_solvable needs at least one pencil size");
  for (auto mi : m)
    if (mi < 2) throw CatalogError("split_solvable pencil sizes must be >= 2");
  const std::size_t r = m.size();
  std::vector<std::string> variables;
  for (std::size_t i = 0; i <= r; ++i) variables.push_back("z" + std::to_string(i));
  std::vector<Normal> normals;
  Normal z0(r + 1, ExactScalar(0));
  z0[0] = 1;
  normals.push_back(z0);
  // z0 - q z_i with distinct slopes q = 1..m_i: same rank-2 lattice as the
  // root-of-unity pencils z0^m - z_i^m.
  for (std::size_t i = 0; i < r; ++i) {
    for (std::int64_t q = 1; q <= m[i]; ++q) {
      Normal v(r + 1, ExactScalar(0));
      v[0] = 1;
      v[i + 1] = -q;
      normals.push_back(std::move(v));
    }
  }
  std::vector<std::string> labels;
  for (const auto& v : normals) labels.push_back(format_linear_form(v, variables));
  return Arrangement(r + 1, std::move(normals), std::move(labels), std::move(variables));
}

Arrangement graphic(const std::vector<std::int64_t>& params) {
  if (params.empty() || params.size() % 2 != 0) throw CatalogError("graphic needs a nonempty list of vertex pairs");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::int64_t max_vertex = 0;
  for (std::size_t i = 0; i < params.size(); i += 2) {
    if (params[i] < 0 || params[i + 1] < 0) throw CatalogError("graphic vertex indices must be >= 0");
    edges.emplace_back(static_cast<std::size_t>(params[i]), static_cast<std::size_t>(params[i + 1]));
    max_vertex = std::max({max_vertex, params[i], params[i + 1]});
  }
  try {
    return graphic_arrangement(SimpleGraph(static_cast<std::size_t>(max_vertex + 1), std::move(edges)));
  } catch (const DomainError& e) {
    throw CatalogError(std::string("graphic: ") + e.what());
  }
}

}  // namespace

std::string builtin_polynomial(std::string_view name) {
  for (const auto& e : fixed_entries)
    if (name == e.name) return e.polynomial;
  throw CatalogError("no fixed polynomial for '" + std::string(name) + "'");
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"braid", "x3", "x2", "nonpappus", "pappus", "split_solvable", "graphic"};
  return names;
}

Arrangement builtin(std::string_view name, const std::vector<std::int64_t>& params) {
  if (name == "braid") {
    if (params.size() > 1 || (params.size() == 1 && params[0] < 3))
      throw CatalogError("braid takes one parameter n >= 3");
    if (params.empty() || params[0] == 3) return parse_arrangement(builtin_polynomial("braid3"));
    // Rank-n braid arrangement: the graphic arrangement of K_{n+1}.
    return graphic_arrangement(SimpleGraph::complete(static_cast<std::size_t>(params[0] + 1)));
  }
  if (name == "x3" || name == "x2" || name == "nonpappus" || name == "pappus") {
    require_no_params(name, params);
    return parse_arrangement(builtin_polynomial(name));
  }
  if (name == "split_solvable") return split_solvable(params);
  if (name == "graphic") return graphic(params);
  throw CatalogError("unknown builtin arrangement '" + std::string(name) + "'");
}

}  // namespace arr
