#pragma once

#include <cstdint>
#include <map>

#include "arr/arrangement.hpp"
#include "arr/jump_loci.hpp"
#include "arr/options.hpp"

namespace arr {

struct MilnorReport {
  std::int64_t order = 0;  // N = sum of multiplicities
  std::int64_t b1 = 0;
  /// j -> contribution of the character t -> zeta^(j m); only j with nonzero
  /// multiplicity appear, and j = 0 always (value n - 1).
  std::map<std::int64_t, std::int64_t> eigen_multiplicities;
  bool trivial_monodromy = false;
  JumpLociHypotheses hypotheses;
};

/// b1 of the Milnor fiber from the characters of Z_N landing in local subtori.
/// HypothesisError: not Q-decomposable. RefusalError: separation not asserted.
/// DomainError: gcd of multiplicities is not 1.
MilnorReport milnor_b1(const MultiArrangement& ma, Separation separated, const EngineOptions& options = {});

/// The same character count restricted to local components, with no
/// hypotheses checked. A lower bound for b1 in general.
MilnorReport milnor_local_bound(const MultiArrangement& ma);

/// Per-flat sweep: (n - 1) + sum over flats of (mu - 1) * #{j != 0 : t_j in T_X}.
std::int64_t milnor_b1_by_flats(const MultiArrangement& ma);

/// rank >= 3 and Q-decomposable. Separation is not decided here.
bool monodromy_trivial_criterion(const MultiArrangement& ma, const EngineOptions& options = {});

}  // namespace arr
