#include "arr/milnor.hpp"

#include "arr/errors.hpp"
#include "arr/holonomy.hpp"

namespace arr {

namespace {

// Is t_j = (zeta^(j m_H))_H inside T_X?
bool in_local_torus(const MultiArrangement& ma, const Flat2& f, std::int64_t j, std::int64_t N) {
  const auto& m = ma.multiplicities;
  std::vector<bool> member(m.size(), false);
  for (auto i : f.members) member[i] = true;
  std::int64_t inside = 0;
  for (std::size_t h = 0; h < m.size(); ++h) {
    if (member[h]) {
      inside += m[h];
    } else if ((j % N) * (m[h] % N) % N != 0) {
      return false;
    }
  }
  return (j % N) * (inside % N) % N == 0;
}

MilnorReport character_sweep(const MultiArrangement& ma, const L2Lattice& l2) {
  MilnorReport r;
  r.order = ma.total_multiplicity();
  const auto n = static_cast<std::int64_t>(ma.arrangement.size());
  r.eigen_multiplicities[0] = n - 1;
  r.b1 = n - 1;
  for (std::int64_t j = 1; j < r.order; ++j) {
    std::int64_t depth = 0;
    for (const auto& f : l2.flats) {
      if (f.mobius < 2 || !in_local_torus(ma, f, j, r.order)) continue;
      depth = f.mobius - 1;
      break;  // supports of distinct flats meet in at most one index
    }
    if (depth == 0) continue;
    r.eigen_multiplicities[j] = depth;
    r.b1 += depth;
  }
  r.trivial_monodromy = r.eigen_multiplicities.size() == 1;
  return r;
}

}  // namespace

MilnorReport milnor_b1(const MultiArrangement& ma, Separation separated, const EngineOptions& options) {
  if (!ma.connected()) throw DomainError("multiplicities must have gcd 1 for a connected Milnor fiber");
  const auto report = is_decomposable(ma.arrangement, options);
  if (!report.rational)
    throw HypothesisError("arrangement is not decomposable over Q (phi_3 = " + std::to_string(report.h3_rank) +
                          ", local rank " + std::to_string(report.local_rank) +
                          "); the local character count is only a lower bound");
  if (separated != Separation::asserted)
    throw RefusalError("Milnor fiber b1 needs the caller to assert that the Alexander invariant is separated");
  MilnorReport r = character_sweep(ma, compute_l2(ma.arrangement));
  r.hypotheses = {true, Separation::asserted};
  return r;
}

MilnorReport milnor_local_bound(const MultiArrangement& ma) {
  MilnorReport r = character_sweep(ma, compute_l2(ma.arrangement));
  r.hypotheses = {false, Separation::unasserted};
  return r;
}

std::int64_t milnor_b1_by_flats(const MultiArrangement& ma) {
  const auto l2 = compute_l2(ma.arrangement);
  const std::int64_t N = ma.total_multiplicity();
  std::int64_t total = static_cast<std::int64_t>(ma.arrangement.size()) - 1;
  for (const auto& f : l2.flats) {
    if (f.mobius < 2) continue;
    std::int64_t hits = 0;
    for (std::int64_t j = 1; j < N; ++j)
      if (in_local_torus(ma, f, j, N)) ++hits;
    total += (f.mobius - 1) * hits;
  }
  return total;
}

bool monodromy_trivial_criterion(const MultiArrangement& ma, const EngineOptions& options) {
  return arrangement_rank(ma.arrangement) >= 3 && is_decomposable(ma.arrangement, options).rational;
}

}  // namespace arr
