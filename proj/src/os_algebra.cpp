#include "arr/os_algebra.hpp"

#include "arr/errors.hpp"

namespace arr {

std::size_t wedge2_index(std::size_t n, std::size_t i, std::size_t j) {
  if (!(i < j && j < n)) throw DomainError("wedge2_index needs i < j < n");
  // Pairs starting below i, then the offset within row i.
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

std::size_t wedge3_index(std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
  if (!(i < j && j < k && k < n)) throw DomainError("wedge3_index needs i < j < k < n");
  std::size_t index = 0;
  for (std::size_t a = 0; a < i; ++a) index += (n - 1 - a) * (n - 2 - a) / 2;
  for (std::size_t b = i + 1; b < j; ++b) index += n - 1 - b;
  return index + (k - j - 1);
}

OSQuadraticIdeal i2_basis(const L2Lattice& l2) {
  OSQuadraticIdeal ideal;
  ideal.n = l2.n;
  for (const auto& f : l2.flats) {
    const auto& m = f.members;
    for (std::size_t a = 0; a < m.size(); ++a)
      for (std::size_t b = a + 1; b < m.size(); ++b)
        for (std::size_t c = b + 1; c < m.size(); ++c) {
          const std::size_t i = m[a], j = m[b], k = m[c];
          linalg::IntRow row{{static_cast<std::uint32_t>(wedge2_index(l2.n, i, j)), 1},
                             {static_cast<std::uint32_t>(wedge2_index(l2.n, i, k)), -1},
                             {static_cast<std::uint32_t>(wedge2_index(l2.n, j, k)), 1}};
          linalg::normalize(row);
          ideal.generators.push_back(std::move(row));
        }
  }
  const std::size_t columns = l2.n * (l2.n - 1) / 2;
  linalg::ExactEchelon echelon(columns);
  // Generators are visited in lexicographic order of their triples.
  for (std::size_t g = 0; g < ideal.generators.size(); ++g)
    if (echelon.insert(ideal.generators[g])) ideal.basis.push_back(g);
  ideal.rank = static_cast<std::int64_t>(ideal.basis.size());
  return ideal;
}

std::int64_t falk_phi3(const Arrangement& a, const EngineOptions& options) {
  const std::size_t n = a.size();
  const OSQuadraticIdeal ideal = i2_basis(compute_l2(a));
  if (ideal.rank == 0 || n < 3) return 0;

  // Inverse of wedge2_index, for reading generator coordinates back.
  std::vector<std::pair<std::size_t, std::size_t>> pair_of;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pair_of.emplace_back(i, j);

  const std::size_t columns = n * (n - 1) * (n - 2) / 6;
  if (columns > options.ceiling) throw ResourceError("Lambda^3 exceeds the resource ceiling");
  std::vector<linalg::IntRow> rows;
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t g : ideal.basis) {
      linalg::IntRow row;
      for (const auto& [col, value] : ideal.generators[g]) {
        auto [i, j] = pair_of[col];
        if (h == i || h == j) continue;
        std::size_t idx;
        std::int64_t sign;
        if (h < i) {
          idx = wedge3_index(n, h, i, j);
          sign = 1;
        } else if (h < j) {
          idx = wedge3_index(n, i, h, j);
          sign = -1;
        } else {
          idx = wedge3_index(n, i, j, h);
          sign = 1;
        }
        row.emplace_back(static_cast<std::uint32_t>(idx), sign * value);
      }
      linalg::normalize(row);
      rows.push_back(std::move(row));
    }
  }
  const auto rank = linalg::row_rank(rows, columns, options.rank).rank;
  return static_cast<std::int64_t>(rows.size() - rank);
}

}  // namespace arr
