#include <doctest.h>

#include <random>

#include "arr/linalg.hpp"
#include "support.hpp"

using namespace arr::linalg;

namespace {

testing::Dense to_dense(const std::vector<IntRow>& rows, std::size_t cols) {
  testing::Dense m(rows.size(), std::vector<mpq_class>(cols, 0));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) m[r][c] = static_cast<long>(v);
  return m;
}

std::vector<IntRow> random_rows(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density, int bound) {
  std::uniform_real_distribution<double> coin(0, 1);
  std::uniform_int_distribution<int> value(-bound, bound);
  std::vector<IntRow> out;
  for (std::size_t r = 0; r < rows; ++r) {
    IntRow row;
    for (std::uint32_t c = 0; c < cols; ++c)
      if (coin(rng) < density) row.emplace_back(c, value(rng));
    normalize(row);
    out.push_back(row);
  }
  return out;
}

// Low-rank integer matrix: products of random factors.
std::vector<IntRow> low_rank_rows(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t rank) {
  const auto left = random_rows(rng, rows, rank, 0.7, 3);
  const auto right = random_rows(rng, rank, cols, 0.5, 3);
  std::vector<IntRow> out;
  for (const auto& l : left) {
    std::vector<std::int64_t> dense(cols, 0);
    for (const auto& [k, v] : l)
      for (const auto& [c, w] : right[k]) dense[c] += v * w;
    IntRow row;
    for (std::uint32_t c = 0; c < cols; ++c) row.emplace_back(c, dense[c]);
    normalize(row);
    out.push_back(row);
  }
  return out;
}

}  // namespace

TEST_CASE("normalize merges and drops zeros") {
  IntRow r{{3, 2}, {1, 5}, {3, -2}, {0, 0}, {1, 1}};
  normalize(r);
  CHECK(r == IntRow{{1, 6}});
}

TEST_CASE("exact and modular ranks agree with dense elimination") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + trial % 13, cols = 1 + (trial * 7) % 17;
    const auto m = trial % 2 ? random_rows(rng, rows, cols, 0.4, 4)
                             : low_rank_rows(rng, rows, cols, 1 + trial % 4);
    const auto expected = testing::dense_rank(to_dense(m, cols));
    ExactEchelon exact(cols);
    for (const auto& r : m) exact.insert(r);
    CHECK(exact.rank() == expected);
    for (auto p : random_primes(2, 100 + trial)) {
      ModularEchelon mod(cols, p);
      for (const auto& r : m) mod.insert(r);
      CHECK(mod.rank() == expected);
    }
    RankPolicy forced_modular;
    forced_modular.exact_column_limit = 0;
    const auto mr = row_rank(m, cols, forced_modular);
    CHECK(mr.rank == expected);
    CHECK(mr.modular_only);
    const auto er = row_rank(m, cols);
    CHECK(er.rank == expected);
    CHECK_FALSE(er.modular_only);
    // The reported rows are independent and span.
    std::vector<IntRow> chosen;
    for (auto i : er.independent_rows) chosen.push_back(m[i]);
    CHECK(testing::dense_rank(to_dense(chosen, cols)) == expected);
    CHECK(chosen.size() == expected);
  }
}

TEST_CASE("large entries stay exact") {
  // Rows with entries near 2^40 whose combination is exactly dependent.
  const std::int64_t big = std::int64_t{1} << 40;
  std::vector<IntRow> m{{{0, big}, {1, big + 1}}, {{0, big + 2}, {1, big + 3}}, {{0, 1}, {1, 1}}};
  CHECK(row_rank(m, 2).rank == 2);
  ExactEchelon e(3);
  CHECK(e.insert({{0, big}, {1, 3}}));
  CHECK(e.insert({{1, big}, {2, 5}}));
  CHECK_FALSE(e.insert({{0, big * 2}, {1, 6 + big}, {2, 5}}));
}

TEST_CASE("primes") {
  CHECK(is_prime(2));
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(2147483649ULL));
  const auto ps = random_primes(3, 9);
  REQUIRE(ps.size() == 3);
  for (auto p : ps) {
    CHECK(is_prime(p));
    CHECK(p > (1ULL << 30));
    CHECK(p < (1ULL << 31));
  }
  CHECK(random_primes(3, 9) == ps);
}

TEST_CASE("smith invariants") {
  // diag(2, 3) ~ diag(1, 6)
  std::vector<IntRow> m{{{0, 2}}, {{1, 3}}};
  CHECK(smith_invariants(m, 2) == std::vector<mpz_class>{1, 6});
  // [[2, 4], [6, 8]] has invariants 2, 4 (det -8).
  std::vector<IntRow> n{{{0, 2}, {1, 4}}, {{0, 6}, {1, 8}}};
  CHECK(smith_invariants(n, 2) == std::vector<mpz_class>{2, 4});
  const auto g = cokernel(n, 3);
  CHECK(g.rank == 1);
  CHECK(g.torsion == std::vector<mpz_class>{2, 4});
  std::vector<IntRow> unimodular{{{0, 1}, {1, 1}}, {{1, 1}}};
  CHECK(cokernel(unimodular, 2).torsion_free());
  CHECK(cokernel(unimodular, 2).rank == 0);
  CHECK(cokernel({}, 4).rank == 4);

  // Oracle: product of invariants equals the gcd of maximal minors for 2x3.
  std::mt19937_64 rng(1);
  for (int t = 0; t < 30; ++t) {
    auto rows = random_rows(rng, 2, 3, 1.0, 6);
    const auto inv = smith_invariants(rows, 3);
    auto at = [&](std::size_t r, std::uint32_t c) -> long {
      for (const auto& [cc, v] : rows[r])
        if (cc == c) return static_cast<long>(v);
      return 0;
    };
    mpz_class minors = 0, entries = 0;
    for (std::uint32_t a = 0; a < 3; ++a)
      for (std::uint32_t b = a + 1; b < 3; ++b) {
        const mpz_class d = at(0, a) * at(1, b) - at(0, b) * at(1, a);
        minors = gcd(minors, d);
      }
    for (std::size_t r = 0; r < 2; ++r)
      for (std::uint32_t c = 0; c < 3; ++c) entries = gcd(entries, mpz_class(at(r, c)));
    std::vector<mpz_class> nonzero;
    for (const auto& x : inv)
      if (x != 0) nonzero.push_back(x);
    if (minors != 0) {
      REQUIRE(nonzero.size() == 2);
      CHECK(nonzero[0] == entries);
      CHECK(nonzero[0] * nonzero[1] == minors);
    }
  }
}
