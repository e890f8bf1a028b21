#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "arr/arrangement.hpp"
#include "arr/options.hpp"

namespace arr {

/// Caller's assertion that the rational Alexander invariant is separated.
/// The library cannot decide this; it only records it.
enum class Separation { unasserted, asserted };

/// L_X = { sum_{i in X} x_i = 0, x_i = 0 off X }.
struct LinearComponent {
  std::vector<std::size_t> support;
  std::int64_t dimension = 0;  // |support| - 1

  friend bool operator==(const LinearComponent&, const LinearComponent&) = default;
};

/// T_X = { prod_{i in X} t_i = 1, t_i = 1 off X }.
struct TorusComponent {
  std::vector<std::size_t> support;
  std::int64_t dimension = 0;  // |support| - 1

  friend bool operator==(const TorusComponent&, const TorusComponent&) = default;
};

struct JumpLociHypotheses {
  bool q_decomposable = true;
  Separation separated = Separation::unasserted;
};

struct CharacteristicComponents {
  std::vector<TorusComponent> components;
  JumpLociHypotheses hypotheses;
};

/// Components of the depth-s resonance variety: one L_X per flat with mu > s.
/// Requires Q-decomposability (HypothesisError) and s >= 1 (DomainError).
std::vector<LinearComponent> resonance_components(const Arrangement& a, std::int64_t s,
                                                  const EngineOptions& options = {});

/// Components of the depth-s characteristic variety through the identity.
/// RefusalError unless separation is asserted.
CharacteristicComponents characteristic_components(const Arrangement& a, std::int64_t s, Separation separated,
                                                    const EngineOptions& options = {});

/// sum_r h_r theta_k(F_r), h_r = number of depth-1 resonance components of dimension r.
std::int64_t chen_ranks_from_resonance(const Arrangement& a, std::int64_t k, const EngineOptions& options = {});

}  // namespace arr
