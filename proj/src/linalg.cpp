#include "arr/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "arr/errors.hpp"

namespace arr::linalg {

void normalize(IntRow& row) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  IntRow out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) {
    if (!out.empty() && out.back().first == c) out.back().second += v;
    else out.emplace_back(c, v);
  }
  std::erase_if(out, [](const auto& e) { return e.second == 0; });
  row = std::move(out);
}

ExactEchelon::ExactEchelon(std::size_t columns) : pivot_of_column_(columns, -1) {}

bool ExactEchelon::insert(const IntRow& row) {
  std::vector<std::uint32_t> cols, next_cols;
  std::vector<mpz_class> vals, next_vals;
  for (const auto& [c, v] : row) {
    if (c >= pivot_of_column_.size()) throw DomainError("row entry outside the column range");
    if (v == 0) continue;
    cols.push_back(c);
    vals.emplace_back(static_cast<long>(v));
  }
  mpz_class g, pf, af;
  std::size_t idx = 0;
  while (idx < cols.size()) {
    const std::int32_t r = pivot_of_column_[cols[idx]];
    if (r < 0) {
      ++idx;
      continue;
    }
    const Row& pivot = rows_[static_cast<std::size_t>(r)];
    mpz_gcd(g.get_mpz_t(), pivot.vals[0].get_mpz_t(), vals[idx].get_mpz_t());
    mpz_divexact(pf.get_mpz_t(), pivot.vals[0].get_mpz_t(), g.get_mpz_t());
    mpz_divexact(af.get_mpz_t(), vals[idx].get_mpz_t(), g.get_mpz_t());
    const bool scale = pf != 1;
    // cand <- pf * cand - af * pivot; entries before idx are untouched by pivot.
    next_cols.assign(cols.begin(), cols.begin() + static_cast<std::ptrdiff_t>(idx));
    next_vals.assign(vals.begin(), vals.begin() + static_cast<std::ptrdiff_t>(idx));
    if (scale)
      for (auto& v : next_vals) v *= pf;
    std::size_t a = idx, b = 0;
    while (a < cols.size() || b < pivot.cols.size()) {
      if (b == pivot.cols.size() || (a < cols.size() && cols[a] < pivot.cols[b])) {
        next_cols.push_back(cols[a]);
        next_vals.push_back(scale ? mpz_class(vals[a] * pf) : vals[a]);
        ++a;
      } else if (a == cols.size() || pivot.cols[b] < cols[a]) {
        next_cols.push_back(pivot.cols[b]);
        next_vals.push_back(-af * pivot.vals[b]);
        ++b;
      } else {
        mpz_class v = scale ? mpz_class(vals[a] * pf) : vals[a];
        v -= af * pivot.vals[b];
        if (v != 0) {
          next_cols.push_back(cols[a]);
          next_vals.push_back(std::move(v));
        }
        ++a;
        ++b;
      }
    }
    cols.swap(next_cols);
    vals.swap(next_vals);
  }
  if (cols.empty()) return false;
  mpz_class content = 0;
  for (const auto& v : vals) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    if (content == 1) break;
  }
  if (vals[0] < 0) content = -content;
  if (content != 1)
    for (auto& v : vals) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
  pivot_of_column_[cols[0]] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(Row{std::move(cols), std::move(vals)});
  return true;
}

ModularEchelon::ModularEchelon(std::size_t columns, std::uint64_t prime)
    : prime_(prime), pivot_of_column_(columns, -1) {
  if (prime_ < 3 || prime_ >= (std::uint64_t{1} << 32)) throw DomainError("modulus must be an odd prime < 2^32");
}

std::uint64_t ModularEchelon::reduce(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(prime_);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(prime_) : r);
}

std::uint64_t ModularEchelon::inverse(std::uint64_t v) const {
  std::uint64_t result = 1, base = v % prime_, e = prime_ - 2;
  while (e) {
    if (e & 1) result = result * base % prime_;
    base = base * base % prime_;
    e >>= 1;
  }
  return result;
}

bool ModularEchelon::insert(const IntRow& row) {
  std::vector<std::uint32_t> cols, next_cols;
  std::vector<std::uint64_t> vals, next_vals;
  for (const auto& [c, v] : row) {
    if (c >= pivot_of_column_.size()) throw DomainError("row entry outside the column range");
    std::uint64_t x = reduce(v);
    if (x == 0) continue;
    cols.push_back(c);
    vals.push_back(x);
  }
  std::size_t idx = 0;
  while (idx < cols.size()) {
    const std::int32_t r = pivot_of_column_[cols[idx]];
    if (r < 0) {
      ++idx;
      continue;
    }
    const Row& pivot = rows_[static_cast<std::size_t>(r)];
    const std::uint64_t f = vals[idx];  // pivot leading value is 1
    next_cols.assign(cols.begin(), cols.begin() + static_cast<std::ptrdiff_t>(idx));
    next_vals.assign(vals.begin(), vals.begin() + static_cast<std::ptrdiff_t>(idx));
    std::size_t a = idx, b = 0;
    while (a < cols.size() || b < pivot.cols.size()) {
      if (b == pivot.cols.size() || (a < cols.size() && cols[a] < pivot.cols[b])) {
        next_cols.push_back(cols[a]);
        next_vals.push_back(vals[a]);
        ++a;
      } else if (a == cols.size() || pivot.cols[b] < cols[a]) {
        next_cols.push_back(pivot.cols[b]);
        next_vals.push_back((prime_ - f * pivot.vals[b] % prime_) % prime_);
        ++b;
      } else {
        std::uint64_t v = (vals[a] + prime_ - f * pivot.vals[b] % prime_) % prime_;
        if (v != 0) {
          next_cols.push_back(cols[a]);
          next_vals.push_back(v);
        }
        ++a;
        ++b;
      }
    }
    cols.swap(next_cols);
    vals.swap(next_vals);
  }
  if (cols.empty()) return false;
  const std::uint64_t inv = inverse(vals[0]);
  for (auto& v : vals) v = v * inv % prime_;
  pivot_of_column_[cols[0]] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(Row{std::move(cols), std::move(vals)});
  return true;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (n % p == 0) return n == p;
  }
  auto mulmod = [](unsigned __int128 a, unsigned __int128 b, std::uint64_t m) {
    return static_cast<std::uint64_t>(a * b % m);
  };
  auto powmod = [&](std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, b, m);
      b = mulmod(b, b, m);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic for n < 3.3e24.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> random_primes(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist((std::uint64_t{1} << 30) + 1, (std::uint64_t{1} << 31) - 1);
  std::vector<std::uint64_t> primes;
  while (primes.size() < count) {
    std::uint64_t p = dist(rng) | 1;
    if (is_prime(p) && std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
  }
  return primes;
}

namespace {

std::vector<std::size_t> insertion_order(std::span<const IntRow> rows) {
  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rows[a].size() < rows[b].size(); });
  return order;
}

}  // namespace

RankResult row_rank(std::span<const IntRow> rows, std::size_t columns, const RankPolicy& policy) {
  const auto order = insertion_order(rows);
  RankResult result;
  if (!policy.allow_modular || columns < policy.exact_column_limit) {
    ExactEchelon echelon(columns);
    for (std::size_t i : order) {
      if (echelon.rank() == columns) break;
      if (echelon.insert(rows[i])) result.independent_rows.push_back(i);
    }
    std::sort(result.independent_rows.begin(), result.independent_rows.end());
    result.rank = result.independent_rows.size();
    return result;
  }
  // Rank mod p never exceeds the rank over Q; accept the largest rank seen
  // once two distinct primes agree on it.
  result.modular_only = true;
  const auto primes = random_primes(6, policy.seed);
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> seen;
  for (std::uint64_t p : primes) {
    ModularEchelon echelon(columns, p);
    std::vector<std::size_t> independent;
    for (std::size_t i : order) {
      if (echelon.rank() == columns) break;
      if (echelon.insert(rows[i])) independent.push_back(i);
    }
    std::sort(independent.begin(), independent.end());
    seen.emplace_back(independent.size(), std::move(independent));
    std::size_t best = 0;
    for (const auto& s : seen) best = std::max(best, s.first);
    auto agreeing = std::count_if(seen.begin(), seen.end(), [&](const auto& s) { return s.first == best; });
    if (agreeing >= 2) {
      for (auto& s : seen)
        if (s.first == best) {
          result.rank = best;
          result.independent_rows = std::move(s.second);
          return result;
        }
    }
  }
  auto best = std::max_element(seen.begin(), seen.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  result.rank = best->first;
  result.independent_rows = std::move(best->second);
  return result;
}

std::vector<mpz_class> smith_invariants(std::span<const IntRow> rows, std::size_t columns) {
  const std::size_t m = rows.size();
  std::vector<std::vector<mpz_class>> a(m, std::vector<mpz_class>(columns, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (const auto& [c, v] : rows[i]) {
      if (c >= columns) throw DomainError("row entry outside the column range");
      a[i][c] += static_cast<long>(v);
    }

  std::vector<mpz_class> diagonal;
  mpz_class q;
  for (std::size_t t = 0; t < std::min(m, columns); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    auto move_min_to_pivot = [&](bool whole_block) {
      std::size_t bi = m, bj = columns;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < columns; ++j) {
          if (!whole_block && i != t && j != t) continue;
          if (a[i][j] == 0) continue;
          if (bi == m || mpz_cmpabs(a[i][j].get_mpz_t(), a[bi][bj].get_mpz_t()) < 0) {
            bi = i;
            bj = j;
          }
        }
      if (bi == m) return false;
      std::swap(a[t], a[bi]);
      if (bj != t)
        for (std::size_t i = 0; i < m; ++i) std::swap(a[i][t], a[i][bj]);
      return true;
    };
    if (!move_min_to_pivot(true)) break;
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t j = t; j < columns; ++j)
          if (a[t][j] != 0) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < columns; ++j) {
        if (a[t][j] == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t i = t; i < m; ++i)
          if (a[i][t] != 0) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (clean) break;
      move_min_to_pivot(false);
    }
    diagonal.push_back(abs(a[t][t]));
  }
  // Diagonal form -> invariant factors via gcd/lcm exchanges.
  for (std::size_t i = 0; i < diagonal.size(); ++i)
    for (std::size_t j = i + 1; j < diagonal.size(); ++j) {
      mpz_class g, l;
      mpz_gcd(g.get_mpz_t(), diagonal[i].get_mpz_t(), diagonal[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), diagonal[i].get_mpz_t(), diagonal[j].get_mpz_t());
      diagonal[i] = g;
      diagonal[j] = l;
    }
  return diagonal;
}

AbelianGroupReport cokernel(std::span<const IntRow> rows, std::size_t columns) {
  auto d = smith_invariants(rows, columns);
  AbelianGroupReport report;
  report.rank = static_cast<std::int64_t>(columns - d.size());
  for (const auto& x : d)
    if (x > 1) report.torsion.push_back(x);
  return report;
}

}  // namespace arr::linalg
