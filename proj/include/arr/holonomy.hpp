#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "arr/arrangement.hpp"
#include "arr/linalg.hpp"
#include "arr/options.hpp"

namespace arr {

/// Degree-2 relator r_{H,X} = [x_H, sum_{K in X} x_K].
struct HolonomyRelator {
  std::size_t hyperplane = 0;
  std::size_t flat = 0;          // index into the L2Lattice
  linalg::IntRow coordinates;    // in the degree-2 Lyndon basis
};

/// Quadratic presentation of the holonomy Lie algebra. For each flat the
/// relator of its largest member is omitted: the relators of a flat sum to zero.
struct HolonomyPresentation {
  std::size_t n = 0;
  L2Lattice l2;
  std::vector<HolonomyRelator> relators;
};

HolonomyPresentation holonomy_relators(const Arrangement& a);

/// phi_1..phi_kmax of the holonomy Lie algebra over Q.
struct GradedRanks {
  std::vector<std::int64_t> values;  // values[k-1] = rank in degree k
  bool modular_only = false;

  std::int64_t at(std::size_t k) const { return values.at(k - 1); }
};

GradedRanks holonomy_ranks(const Arrangement& a, std::size_t kmax, const EngineOptions& options = {});
std::int64_t holonomy_rank(const Arrangement& a, std::size_t k, const EngineOptions& options = {});

/// h_k(A) as an abelian group, from the integer generators of J_k and the
/// Smith normal form. Cost grows like n^(k-2) generator rows.
linalg::AbelianGroupReport holonomy_group(const Arrangement& a, std::size_t k,
                                          const EngineOptions& options = {});
linalg::AbelianGroupReport h3_group(const Arrangement& a, const EngineOptions& options = {});

/// 2 * sum over flats of binom(mu + 1, 3).
std::int64_t local_h3_rank(const Arrangement& a);
std::int64_t local_h3_rank(const L2Lattice& l2);

struct DecomposabilityReport {
  bool rational = false;
  bool integral = false;
  std::int64_t h3_rank = 0;
  std::int64_t local_rank = 0;
  std::vector<mpz_class> torsion;
};

/// rational: phi_3 equals the local rank. integral: additionally h_3 is
/// torsion-free (the comparison map onto the local part is surjective).
DecomposabilityReport is_decomposable(const Arrangement& a, const EngineOptions& options = {});

enum class AlexanderRoute {
  /// Image of J inside the free metabelian Lie algebra, modelled as the image
  /// of the Koszul differential S (x) Lambda^2 -> S (x) V.
  metabelian,
  /// dim Lie_j - rank(J_j + [Lie', Lie']_j) in the Lyndon basis.
  lyndon,
};

/// dim of the infinitesimal Alexander invariant in degrees 0..kmax
/// (graded piece k sits in Lie degree k + 2).
GradedRanks infinitesimal_alexander_dims(const Arrangement& a, std::size_t kmax,
                                         const EngineOptions& options = {},
                                         AlexanderRoute route = AlexanderRoute::metabelian);

}  // namespace arr
