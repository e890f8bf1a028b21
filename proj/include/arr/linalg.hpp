#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace arr::linalg {

/// Sparse integer row: (column, value) pairs with strictly increasing columns
/// and no zero values.
using IntRow = std::vector<std::pair<std::uint32_t, std::int64_t>>;

/// Sorts by column, merges duplicates, drops zeros.
void normalize(IntRow& row);

/// Incremental echelon basis over Q using fraction-free integer row operations.
/// Stored rows are primitive with a positive leading entry; every stored row has
/// its leading column free of all other rows' leading entries below it.
class ExactEchelon {
 public:
  explicit ExactEchelon(std::size_t columns);
  /// Reduces the row against the basis; returns true and stores it if independent.
  bool insert(const IntRow& row);
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t columns() const noexcept { return pivot_of_column_.size(); }

 private:
  struct Row {
    std::vector<std::uint32_t> cols;
    std::vector<mpz_class> vals;
  };
  std::vector<Row> rows_;
  std::vector<std::int32_t> pivot_of_column_;
};

/// Same contract as ExactEchelon over Z/p, p < 2^32.
class ModularEchelon {
 public:
  ModularEchelon(std::size_t columns, std::uint64_t prime);
  bool insert(const IntRow& row);
  std::size_t rank() const noexcept { return rows_.size(); }
  std::uint64_t prime() const noexcept { return prime_; }

 private:
  struct Row {
    std::vector<std::uint32_t> cols;
    std::vector<std::uint64_t> vals;  // leading value is 1
  };
  std::uint64_t reduce(std::int64_t v) const;
  std::uint64_t inverse(std::uint64_t v) const;

  std::uint64_t prime_;
  std::vector<Row> rows_;
  std::vector<std::int32_t> pivot_of_column_;
};

struct RankPolicy {
  /// Matrices with fewer columns are ranked exactly.
  std::size_t exact_column_limit = 5000;
  /// When false, every rank is exact regardless of size.
  bool allow_modular = true;
  std::uint64_t seed = 20240601;
};

struct RankResult {
  std::size_t rank = 0;
  /// Indices (into the input) of a maximal independent subset of rows.
  std::vector<std::size_t> independent_rows;
  /// True when the rank rests on agreement of two random primes > 2^30.
  bool modular_only = false;
};

/// Row rank over Q. Rows are inserted sparsest first; the independent subset is
/// reported in input order.
RankResult row_rank(std::span<const IntRow> rows, std::size_t columns, const RankPolicy& policy = {});

/// Deterministic primes in (2^30, 2^31) drawn from the seed.
std::vector<std::uint64_t> random_primes(std::size_t count, std::uint64_t seed);
bool is_prime(std::uint64_t n);

/// Nonzero invariant factors d1 | d2 | ... of the Smith normal form of an
/// integer matrix given by sparse rows.
std::vector<mpz_class> smith_invariants(std::span<const IntRow> rows, std::size_t columns);

/// Finitely generated abelian group Z^rank + sum Z/t_i.
struct AbelianGroupReport {
  std::int64_t rank = 0;
  std::vector<mpz_class> torsion;  // each > 1, each dividing the next

  bool torsion_free() const { return torsion.empty(); }
};

/// Cokernel of the row lattice inside Z^columns.
AbelianGroupReport cokernel(std::span<const IntRow> rows, std::size_t columns);

}  // namespace arr::linalg
