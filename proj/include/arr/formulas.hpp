#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "arr/arrangement.hpp"
#include "arr/options.hpp"

namespace arr {

/// phi_k(F_n) = (1/k) sum_{d | k} mu(d) n^(k/d).
std::int64_t witt_rank(std::int64_t n, std::int64_t k);

/// theta_k(F_n): n for k = 1, else (k - 1) binom(n + k - 2, k).
std::int64_t free_chen(std::int64_t n, std::int64_t k);

/// Classical Moebius function.
std::int64_t mobius_function(std::int64_t n);

/// Exponents phi_1..phi_kmax with prod_k (1 - t^k)^phi_k = prod_j (1 - j t)^e_j,
/// given the map j -> e_j.
std::vector<std::int64_t> lcs_from_product(const std::map<std::int64_t, std::int64_t>& exponents,
                                           std::size_t kmax);

enum class RankKind { lcs, chen };
enum class RankHypothesis { none, q_decomposable, graphic };

const char* to_string(RankKind kind);
const char* to_string(RankHypothesis hypothesis);

struct RankTable {
  RankKind kind = RankKind::lcs;
  std::map<std::int64_t, std::int64_t> values;  // degree -> rank, contiguous from 1
  RankHypothesis hypothesis = RankHypothesis::none;
};

/// (k - 1) sum over flats with mu >= 2 of binom(mu + k - 2, k). Requires k >= 2.
std::int64_t chen_lower_bound(const Arrangement& a, std::int64_t k);
std::int64_t chen_lower_bound(const L2Lattice& l2, std::int64_t k);

/// Chen ranks of a Q-decomposable arrangement; HypothesisError otherwise.
std::int64_t chen_ranks_decomposable(const Arrangement& a, std::int64_t k, const EngineOptions& options = {});
RankTable chen_table_decomposable(const Arrangement& a, std::size_t kmax, const EngineOptions& options = {});

/// LCS ranks from the product formula of a Q-decomposable arrangement.
RankTable lcs_ranks_decomposable(const Arrangement& a, std::size_t kmax, const EngineOptions& options = {});

/// kappa_s = number of K_{s+1} subgraphs, s = 0..|V|-1.
std::vector<std::int64_t> clique_counts(const SimpleGraph& g);

/// LCS ranks of a graphic arrangement.
RankTable graphic_lcs(const SimpleGraph& g, std::size_t kmax);
/// The double-sum form sum_j sum_s (-1)^(s-j) binom(s, j) kappa_s phi_k(F_j), for any graph.
std::vector<std::int64_t> graphic_lcs_double_sum(const SimpleGraph& g, std::size_t kmax);

}  // namespace arr
