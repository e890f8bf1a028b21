#include "arr/formulas.hpp"

#include <gmpxx.h>

#include <functional>

#include "arr/errors.hpp"
#include "arr/holonomy.hpp"

namespace arr {

namespace {

mpz_class mpz_pow(std::int64_t base, std::int64_t e) {
  mpz_class b(static_cast<long>(base)), r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

void require_q_decomposable(const Arrangement& a, const EngineOptions& options) {
  const auto report = is_decomposable(a, options);
  if (!report.rational)
    throw HypothesisError("arrangement is not decomposable over Q (phi_3 = " + std::to_string(report.h3_rank) +
                          ", local rank " + std::to_string(report.local_rank) + ")");
}

}  // namespace

std::int64_t mobius_function(std::int64_t n) {
  if (n < 1) throw DomainError("Moebius function needs n >= 1");
  std::int64_t result = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

std::int64_t witt_rank(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1) throw DomainError("witt_rank needs n >= 1 and k >= 1");
  mpz_class total = 0;
  for (std::int64_t d = 1; d <= k; ++d)
    if (k % d == 0) total += mobius_function(d) * mpz_pow(n, k / d);
  return to_int64(mpz_class(total / static_cast<long>(k)));
}

std::int64_t free_chen(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1) throw DomainError("free_chen needs n >= 1 and k >= 1");
  if (k == 1) return n;
  return (k - 1) * binomial(n + k - 2, k);
}

std::vector<std::int64_t> lcs_from_product(const std::map<std::int64_t, std::int64_t>& exponents, std::size_t kmax) {
  // log prod (1 - t^k)^phi_k = sum_j e_j log(1 - j t) gives, for every N,
  // sum_{k | N} k phi_k = sum_j e_j j^N =: c_N; Moebius inversion recovers phi_N.
  std::vector<mpz_class> c(kmax + 1, 0);
  for (std::size_t N = 1; N <= kmax; ++N)
    for (const auto& [j, e] : exponents) c[N] += e * mpz_pow(j, static_cast<std::int64_t>(N));
  std::vector<std::int64_t> phi;
  for (std::size_t N = 1; N <= kmax; ++N) {
    mpz_class sum = 0;
    for (std::size_t d = 1; d <= N; ++d)
      if (N % d == 0) sum += mobius_function(static_cast<std::int64_t>(d)) * c[N / d];
    if (sum % static_cast<long>(N) != 0) throw std::logic_error("product formula exponents are not integral");
    phi.push_back(to_int64(mpz_class(sum / static_cast<long>(N))));
  }
  return phi;
}

const char* to_string(RankKind kind) { return kind == RankKind::lcs ? "lcs" : "chen"; }

const char* to_string(RankHypothesis hypothesis) {
  switch (hypothesis) {
    case RankHypothesis::none: return "none";
    case RankHypothesis::q_decomposable: return "q_decomposable";
    case RankHypothesis::graphic: return "graphic";
  }
  return "none";
}

std::int64_t chen_lower_bound(const L2Lattice& l2, std::int64_t k) {
  if (k < 2) throw DomainError("chen_lower_bound needs k >= 2");
  std::int64_t sum = 0;
  for (const auto& f : l2.flats)
    if (f.mobius >= 2) sum += binomial(f.mobius + k - 2, k);
  return (k - 1) * sum;
}

std::int64_t chen_lower_bound(const Arrangement& a, std::int64_t k) { return chen_lower_bound(compute_l2(a), k); }

std::int64_t chen_ranks_decomposable(const Arrangement& a, std::int64_t k, const EngineOptions& options) {
  if (k < 1) throw DomainError("Chen ranks need k >= 1");
  require_q_decomposable(a, options);
  if (k == 1) return static_cast<std::int64_t>(a.size());
  return chen_lower_bound(a, k);
}

RankTable chen_table_decomposable(const Arrangement& a, std::size_t kmax, const EngineOptions& options) {
  require_q_decomposable(a, options);
  RankTable table{RankKind::chen, {}, RankHypothesis::q_decomposable};
  const L2Lattice l2 = compute_l2(a);
  for (std::size_t k = 1; k <= kmax; ++k)
    table.values[static_cast<std::int64_t>(k)] =
        k == 1 ? static_cast<std::int64_t>(a.size()) : chen_lower_bound(l2, static_cast<std::int64_t>(k));
  return table;
}

RankTable lcs_ranks_decomposable(const Arrangement& a, std::size_t kmax, const EngineOptions& options) {
  require_q_decomposable(a, options);
  const L2Lattice l2 = compute_l2(a);
  // prod (1 - t^k)^phi_k = (1 - t)^(n - sum mu) prod_X (1 - mu(X) t)
  std::map<std::int64_t, std::int64_t> exponents;
  std::int64_t free_part = static_cast<std::int64_t>(a.size());
  for (const auto& f : l2.flats) {
    if (f.mobius < 2) continue;  // mu = 1 contributes (1 - t), cancelling in the free part
    exponents[f.mobius] += 1;
    free_part -= f.mobius;
  }
  exponents[1] += free_part;
  RankTable table{RankKind::lcs, {}, RankHypothesis::q_decomposable};
  const auto phi = lcs_from_product(exponents, kmax);
  for (std::size_t k = 0; k < phi.size(); ++k) table.values[static_cast<std::int64_t>(k + 1)] = phi[k];
  return table;
}

std::vector<std::int64_t> clique_counts(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::int64_t> kappa(n, 0);
  // Extend each clique only by vertices larger than all its members.
  std::vector<std::size_t> clique;
  std::function<void(const std::vector<std::size_t>&)> extend = [&](const std::vector<std::size_t>& candidates) {
    for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
      const std::size_t v = candidates[idx];
      clique.push_back(v);
      ++kappa[clique.size() - 1];
      std::vector<std::size_t> next;
      for (std::size_t j = idx + 1; j < candidates.size(); ++j)
        if (g.adjacent(v, candidates[j])) next.push_back(candidates[j]);
      extend(next);
      clique.pop_back();
    }
  };
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  extend(all);
  return kappa;
}

std::vector<std::int64_t> graphic_lcs_double_sum(const SimpleGraph& g, std::size_t kmax) {
  const auto kappa = clique_counts(g);
  auto kappa_at = [&](std::int64_t s) { return s < static_cast<std::int64_t>(kappa.size()) ? kappa[s] : 0; };
  std::vector<std::int64_t> phi;
  for (std::int64_t k = 1; k <= static_cast<std::int64_t>(kmax); ++k) {
    std::int64_t total = 0;
    for (std::int64_t j = 1; j <= k; ++j) {
      std::int64_t coeff = 0;
      for (std::int64_t s = j; s <= k; ++s) {
        const std::int64_t sign = (s - j) % 2 == 0 ? 1 : -1;
        coeff += sign * binomial(s, j) * kappa_at(s);
      }
      if (coeff != 0) total += coeff * witt_rank(j, k);
    }
    phi.push_back(total);
  }
  return phi;
}

RankTable graphic_lcs(const SimpleGraph& g, std::size_t kmax) {
  const auto kappa = clique_counts(g);
  const std::int64_t k1 = kappa.size() > 1 ? kappa[1] : 0;
  const std::int64_t k2 = kappa.size() > 2 ? kappa[2] : 0;
  const std::int64_t k3 = kappa.size() > 3 ? kappa[3] : 0;
  std::vector<std::int64_t> phi;
  if (k3 == 0) {
    // K4-free: decomposable, prod (1 - t^k)^phi_k = (1 - t)^(k1 - 2 k2) (1 - 2t)^k2.
    phi = lcs_from_product({{1, k1 - 2 * k2}, {2, k2}}, kmax);
  } else {
    phi = graphic_lcs_double_sum(g, kmax);
  }
  RankTable table{RankKind::lcs, {}, RankHypothesis::graphic};
  for (std::size_t k = 0; k < phi.size(); ++k) table.values[static_cast<std::int64_t>(k + 1)] = phi[k];
  return table;
}

}  // namespace arr
