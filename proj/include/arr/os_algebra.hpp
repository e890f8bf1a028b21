#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "arr/arrangement.hpp"
#include "arr/linalg.hpp"
#include "arr/options.hpp"

namespace arr {

/// Column index of e_i ^ e_j (i < j) in the lexicographic basis of Lambda^2.
std::size_t wedge2_index(std::size_t n, std::size_t i, std::size_t j);
/// Column index of e_i ^ e_j ^ e_k (i < j < k) in the lexicographic basis of Lambda^3.
std::size_t wedge3_index(std::size_t n, std::size_t i, std::size_t j, std::size_t k);

/// Degree-2 piece of the Orlik-Solomon ideal.
struct OSQuadraticIdeal {
  std::size_t n = 0;
  /// d(e_i e_j e_k) for every triple inside a flat; each has three +-1 entries.
  std::vector<linalg::IntRow> generators;
  /// Rows of generators forming a basis, chosen by lexicographic elimination.
  std::vector<std::size_t> basis;
  std::int64_t rank = 0;
};

OSQuadraticIdeal i2_basis(const L2Lattice& l2);

/// Nullity of the multiplication map E^1 (x) I^2 -> E^3.
std::int64_t falk_phi3(const Arrangement& a, const EngineOptions& options = {});

}  // namespace arr
