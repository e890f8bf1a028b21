#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "arr/arrangement.hpp"
#include "arr/errors.hpp"

namespace testing {

using arr::Arrangement;
using arr::Normal;

inline Normal ints(std::initializer_list<long> xs) {
  Normal v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

/// m lines through one point of the plane: x + q y for q = 0..m-1 (and y).
inline Arrangement pencil(std::size_t lines) {
  std::vector<Normal> normals{ints({0, 1})};
  for (std::size_t q = 0; normals.size() < lines; ++q) normals.push_back(ints({1, static_cast<long>(q)}));
  return Arrangement(2, normals);
}

/// Pencil of `lines` hyperplanes lifted to C^3 (rank 2, central).
inline Arrangement pencil3(std::size_t lines) {
  std::vector<Normal> normals{ints({0, 1, 0})};
  for (std::size_t q = 0; normals.size() < lines; ++q) normals.push_back(ints({1, static_cast<long>(q), 0}));
  return Arrangement(3, normals);
}

/// Random essential arrangement in C^3 with small integer entries.
inline Arrangement random_rank3(std::mt19937_64& rng, std::size_t n, int bound = 2) {
  std::uniform_int_distribution<int> coeff(-bound, bound);
  for (;;) {
    std::vector<Normal> normals;
    for (std::size_t i = 0; i < n; ++i) normals.push_back(ints({coeff(rng), coeff(rng), coeff(rng)}));
    try {
      Arrangement a(3, normals);
      if (arr::arrangement_rank(a) == 3) return a;
    } catch (const arr::Error&) {
    }
  }
}

// --- independent Gaussian elimination over Q -------------------------------

using Dense = std::vector<std::vector<mpq_class>>;

inline std::size_t dense_rank(Dense m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const mpq_class f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Flats by brute force: group hyperplanes by the line through pairs, comparing
/// cross products of normals (C^3 only).
inline std::set<std::vector<std::size_t>> brute_flats3(const Arrangement& a) {
  auto cross = [&](std::size_t i, std::size_t j) {
    const auto &u = a.normal(i), &v = a.normal(j);
    std::vector<mpq_class> c{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
    return c;
  };
  std::set<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const auto line = cross(i, j);
      std::vector<std::size_t> members;
      for (std::size_t k = 0; k < a.size(); ++k) {
        const auto& w = a.normal(k);
        if (line[0] * w[0] + line[1] * w[1] + line[2] * w[2] == 0) members.push_back(k);
      }
      out.insert(members);
    }
  return out;
}

/// b2 by deletion-restriction: b2(A) = b2(A - H) + |A^H| where A^H is the
/// restriction to the last hyperplane, computed in coordinates on H.
inline std::int64_t b2_deletion_restriction(const std::vector<Normal>& normals) {
  if (normals.size() < 2) return 0;
  const Normal& h = normals.back();
  std::size_t p = 0;
  while (h[p] == 0) ++p;
  std::set<std::vector<mpq_class>> restricted;
  for (std::size_t i = 0; i + 1 < normals.size(); ++i) {
    const auto& k = normals[i];
    std::vector<mpq_class> r;
    const mpq_class f = k[p] / h[p];
    for (std::size_t c = 0; c < k.size(); ++c)
      if (c != p) r.push_back(k[c] - f * h[c]);
    auto lead = std::find_if(r.begin(), r.end(), [](const mpq_class& x) { return x != 0; });
    if (lead == r.end()) continue;  // cannot happen for distinct hyperplanes
    const mpq_class s = *lead;
    for (auto& x : r) x /= s;
    restricted.insert(r);
  }
  std::vector<Normal> deleted(normals.begin(), normals.end() - 1);
  return b2_deletion_restriction(deleted) + static_cast<std::int64_t>(restricted.size());
}

// --- graphs ------------------------------------------------------------------

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

/// One representative per isomorphism class of graphs on exactly v vertices
/// with at least one edge.
inline std::vector<EdgeList> graphs_up_to_iso(std::size_t v) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = i + 1; j < v; ++j) slots.emplace_back(i, j);
  std::vector<std::vector<std::size_t>> slot_maps;
  std::vector<std::size_t> perm(v);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<std::size_t> map;
    for (const auto& [x, y] : slots) {
      auto a = perm[x], b = perm[y];
      if (a > b) std::swap(a, b);
      map.push_back(static_cast<std::size_t>(std::find(slots.begin(), slots.end(), std::make_pair(a, b)) - slots.begin()));
    }
    slot_maps.push_back(map);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::set<std::uint64_t> seen;
  std::vector<EdgeList> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::uint64_t canon = ~std::uint64_t{0};
    for (const auto& map : slot_maps) {
      std::uint64_t image = 0;
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (mask >> s & 1) image |= std::uint64_t{1} << map[s];
      canon = std::min(canon, image);
    }
    if (!seen.insert(canon).second) continue;
    EdgeList edges;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1) edges.push_back(slots[s]);
    out.push_back(edges);
  }
  return out;
}

inline bool has_k4(std::size_t v, const EdgeList& edges) {
  std::set<std::pair<std::size_t, std::size_t>> e(edges.begin(), edges.end());
  auto adj = [&](std::size_t a, std::size_t b) { return e.count({std::min(a, b), std::max(a, b)}) > 0; };
  for (std::size_t a = 0; a < v; ++a)
    for (std::size_t b = a + 1; b < v; ++b)
      for (std::size_t c = b + 1; c < v; ++c)
        for (std::size_t d = c + 1; d < v; ++d)
          if (adj(a, b) && adj(a, c) && adj(a, d) && adj(b, c) && adj(b, d) && adj(c, d)) return true;
  return false;
}

/// Random multiplicity vector with entries in [1, top] and gcd 1.
inline std::vector<std::int64_t> random_multiplicities(std::mt19937_64& rng, std::size_t n, int top = 6) {
  std::uniform_int_distribution<int> d(1, top);
  for (;;) {
    std::vector<std::int64_t> m(n);
    std::int64_t g = 0;
    for (auto& x : m) g = std::gcd(g, x = d(rng));
    if (g == 1) return m;
  }
}

}  // namespace testing
