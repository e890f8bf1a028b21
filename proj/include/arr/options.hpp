#pragma once

#include <cstddef>

#include "arr/linalg.hpp"

namespace arr {

/// Knobs shared by the graded linear-algebra computations.
struct EngineOptions {
  /// Largest graded dimension (Lyndon words, monomial-vector columns) allowed.
  std::size_t ceiling = 200000;
  linalg::RankPolicy rank;
};

}  // namespace arr
