#include "arr/holonomy.hpp"

#include <map>
#include <stdexcept>

#include "arr/errors.hpp"
#include "arr/lyndon.hpp"
#include "arr/os_algebra.hpp"

namespace arr {

namespace {

using linalg::IntRow;

IntRow combine_ad(lie::FreeLieAlgebra& algebra, std::size_t generator, std::size_t degree, const IntRow& u) {
  IntRow out;
  for (const auto& [w, c] : u)
    for (const auto& [col, v] : algebra.ad_generator(generator, degree, w)) out.emplace_back(col, c * v);
  linalg::normalize(out);
  return out;
}

// Walks J(A) degree by degree. The ideal is generated in degree 2 and the
// algebra in degree 1, so J_{d+1} = [L_1, J_d]: bracketing a spanning set of
// J_d with every generator spans J_{d+1}. Each step keeps only an independent
// subset of the generator rows, so rows stay sparse combinations of brackets.
class IdealWalker {
 public:
  IdealWalker(const Arrangement& a, const EngineOptions& options)
      : options_(options), algebra_(a.size(), options.ceiling), presentation_(holonomy_relators(a)) {}

  lie::FreeLieAlgebra& algebra() { return algebra_; }
  const HolonomyPresentation& presentation() const { return presentation_; }
  std::size_t degree() const { return degree_; }
  bool modular_only() const { return modular_only_; }
  const std::vector<IntRow>& basis_rows() const { return basis_; }

  /// Generators of J in the next degree (degree 2 on the first call).
  std::vector<IntRow> next_generators() {
    std::vector<IntRow> gens;
    if (degree_ == 0) {
      for (const auto& r : presentation_.relators) gens.push_back(r.coordinates);
      return gens;
    }
    for (const auto& u : basis_)
      for (std::size_t i = 0; i < algebra_.generators(); ++i) {
        IntRow row = combine_ad(algebra_, i, degree_, u);
        if (!row.empty()) gens.push_back(std::move(row));
      }
    return gens;
  }

  /// Advances one degree and returns rank J in that degree.
  std::size_t advance() {
    const std::size_t next = degree_ == 0 ? 2 : degree_ + 1;
    std::vector<IntRow> gens = next_generators();
    const std::size_t columns = algebra_.basis(next).words.size();
    auto result = linalg::row_rank(gens, columns, options_.rank);
    modular_only_ = modular_only_ || result.modular_only;
    std::vector<IntRow> basis;
    basis.reserve(result.independent_rows.size());
    for (std::size_t i : result.independent_rows) basis.push_back(std::move(gens[i]));
    basis_ = std::move(basis);
    degree_ = next;
    return result.rank;
  }

 private:
  EngineOptions options_;
  lie::FreeLieAlgebra algebra_;
  HolonomyPresentation presentation_;
  std::size_t degree_ = 0;
  bool modular_only_ = false;
  std::vector<IntRow> basis_;
};

// Exponent vectors of degree d in n variables, lexicographically descending.
class MonomialIndex {
 public:
  MonomialIndex(std::size_t n, std::size_t degree) : n_(n) {
    std::vector<std::uint8_t> e(n, 0);
    fill(e, 0, degree);
  }
  std::size_t size() const { return monomials_.size(); }
  const std::string& at(std::size_t i) const { return monomials_[i]; }
  std::size_t index_of(const std::string& e) const { return index_.at(e); }

 private:
  void fill(std::vector<std::uint8_t>& e, std::size_t pos, std::size_t remaining) {
    if (pos + 1 == n_) {
      e[pos] = static_cast<std::uint8_t>(remaining);
      std::string key(e.begin(), e.end());
      index_.emplace(key, monomials_.size());
      monomials_.push_back(std::move(key));
      return;
    }
    for (std::size_t k = remaining + 1; k-- > 0;) {
      e[pos] = static_cast<std::uint8_t>(k);
      fill(e, pos + 1, remaining - k);
    }
  }

  std::size_t n_;
  std::vector<std::string> monomials_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Dimension of the free metabelian Lie algebra in degree j >= 2, as the rank
// of the Koszul map S_{j-2} (x) Lambda^2 -> S_{j-1} (x) V. The map preserves
// multidegree; the block of multidegree alpha is the signed incidence matrix
// of the complete graph on supp(alpha), of rank |supp(alpha)| - 1.
std::int64_t metabelian_dimension(std::size_t n, std::size_t j) {
  std::int64_t total = 0;
  // Multidegrees of total degree j with support size s: binom(n, s) binom(j-1, s-1).
  for (std::size_t s = 2; s <= std::min(n, j); ++s)
    total += binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(s)) *
             binomial(static_cast<std::int64_t>(j) - 1, static_cast<std::int64_t>(s) - 1) *
             static_cast<std::int64_t>(s - 1);
  return total;
}

GradedRanks alexander_metabelian(const Arrangement& a, std::size_t kmax, const EngineOptions& options) {
  const std::size_t n = a.size();
  GradedRanks out;
  const HolonomyPresentation presentation = holonomy_relators(a);
  std::vector<IntRow> relators;
  for (const auto& r : presentation.relators) relators.push_back(r.coordinates);
  const std::size_t lambda2 = n * (n - 1) / 2;
  auto basis = linalg::row_rank(relators, lambda2, options.rank);
  out.modular_only = basis.modular_only;

  std::vector<std::pair<std::size_t, std::size_t>> pair_of;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pair_of.emplace_back(i, j);

  for (std::size_t k = 0; k <= kmax; ++k) {
    const std::size_t j = k + 2;
    const std::int64_t total = metabelian_dimension(n, j);
    const MonomialIndex sources(n, j - 2), targets(n, j - 1);
    const std::size_t columns = targets.size() * n;
    if (columns > options.ceiling)
      throw ResourceError("S_" + std::to_string(j - 1) + " (x) V has " + std::to_string(columns) +
                          " coordinates, above the ceiling of " + std::to_string(options.ceiling));
    std::vector<IntRow> rows;
    rows.reserve(sources.size() * basis.independent_rows.size());
    for (std::size_t m = 0; m < sources.size(); ++m) {
      for (std::size_t r : basis.independent_rows) {
        IntRow row;
        for (const auto& [col, c] : relators[r]) {
          auto [x, y] = pair_of[col];
          // delta(m (x) x^y) = (m x) (x) e_y - (m y) (x) e_x
          std::string mx = sources.at(m), my = sources.at(m);
          ++mx[x];
          ++my[y];
          row.emplace_back(static_cast<std::uint32_t>(targets.index_of(mx) * n + y), c);
          row.emplace_back(static_cast<std::uint32_t>(targets.index_of(my) * n + x), -c);
        }
        linalg::normalize(row);
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
    auto rank = linalg::row_rank(rows, columns, options.rank);
    out.modular_only = out.modular_only || rank.modular_only;
    out.values.push_back(total - static_cast<std::int64_t>(rank.rank));
  }
  return out;
}

GradedRanks alexander_lyndon(const Arrangement& a, std::size_t kmax, const EngineOptions& options) {
  GradedRanks out;
  IdealWalker walker(a, options);
  auto& algebra = walker.algebra();
  for (std::size_t k = 0; k <= kmax; ++k) {
    const std::size_t j = k + 2;
    std::vector<IntRow> rows = walker.next_generators();
    // [Lie', Lie'] in degree j: brackets of basis elements of degrees p, q >= 2.
    for (std::size_t p = 2; 2 * p <= j; ++p) {
      const std::size_t q = j - p;
      const auto& bp = algebra.basis(p).words;
      const auto& bq = algebra.basis(q).words;
      for (std::size_t u = 0; u < bp.size(); ++u)
        for (std::size_t v = (p == q ? u + 1 : 0); v < bq.size(); ++v) {
          IntRow row = algebra.coordinates(algebra.bracket_basis(bp[u], bq[v]), j);
          if (!row.empty()) rows.push_back(std::move(row));
        }
    }
    const std::size_t columns = algebra.basis(j).words.size();
    auto rank = linalg::row_rank(rows, columns, options.rank);
    out.modular_only = out.modular_only || rank.modular_only;
    out.values.push_back(static_cast<std::int64_t>(columns) - static_cast<std::int64_t>(rank.rank));
    walker.advance();
    out.modular_only = out.modular_only || walker.modular_only();
  }
  return out;
}

}  // namespace

HolonomyPresentation holonomy_relators(const Arrangement& a) {
  HolonomyPresentation p;
  p.n = a.size();
  p.l2 = compute_l2(a);
  for (std::size_t f = 0; f < p.l2.flats.size(); ++f) {
    const auto& members = p.l2.flats[f].members;
    for (std::size_t t = 0; t + 1 < members.size(); ++t) {
      const std::size_t h = members[t];
      IntRow row;
      for (std::size_t k : members) {
        if (k == h) continue;
        // [x_h, x_k] is the Lyndon basis element hk when h < k.
        if (h < k) row.emplace_back(static_cast<std::uint32_t>(wedge2_index(p.n, h, k)), 1);
        else row.emplace_back(static_cast<std::uint32_t>(wedge2_index(p.n, k, h)), -1);
      }
      linalg::normalize(row);
      p.relators.push_back(HolonomyRelator{h, f, std::move(row)});
    }
  }
  return p;
}

GradedRanks holonomy_ranks(const Arrangement& a, std::size_t kmax, const EngineOptions& options) {
  if (kmax == 0) throw DomainError("holonomy ranks need kmax >= 1");
  GradedRanks out;
  out.values.push_back(static_cast<std::int64_t>(a.size()));
  if (kmax == 1) return out;
  IdealWalker walker(a, options);
  while (walker.degree() < kmax) {
    const std::size_t rank = walker.advance();
    const std::size_t dim = walker.algebra().basis(walker.degree()).words.size();
    out.values.push_back(static_cast<std::int64_t>(dim - rank));
  }
  out.modular_only = walker.modular_only();
  return out;
}

std::int64_t holonomy_rank(const Arrangement& a, std::size_t k, const EngineOptions& options) {
  if (k == 0) throw DomainError("holonomy rank needs k >= 1");
  return holonomy_ranks(a, k, options).at(k);
}

linalg::AbelianGroupReport holonomy_group(const Arrangement& a, std::size_t k, const EngineOptions& options) {
  if (k == 0) throw DomainError("holonomy group needs k >= 1");
  if (k == 1) return linalg::AbelianGroupReport{static_cast<std::int64_t>(a.size()), {}};
  lie::FreeLieAlgebra algebra(a.size(), options.ceiling);
  const HolonomyPresentation p = holonomy_relators(a);
  // Over Z the full generating set is kept: a rational basis need not span J_k.
  std::vector<IntRow> gens;
  for (const auto& r : p.relators) gens.push_back(r.coordinates);
  for (std::size_t d = 2; d < k; ++d) {
    std::vector<IntRow> next;
    for (const auto& u : gens)
      for (std::size_t i = 0; i < a.size(); ++i) {
        IntRow row = combine_ad(algebra, i, d, u);
        if (!row.empty()) next.push_back(std::move(row));
      }
    gens = std::move(next);
    if (gens.size() > options.ceiling) throw ResourceError("integer generating set of J exceeds the ceiling");
  }
  return linalg::cokernel(gens, algebra.basis(k).words.size());
}

linalg::AbelianGroupReport h3_group(const Arrangement& a, const EngineOptions& options) {
  return holonomy_group(a, 3, options);
}

std::int64_t local_h3_rank(const L2Lattice& l2) {
  std::int64_t total = 0;
  for (const auto& f : l2.flats) total += binomial(f.mobius + 1, 3);
  return 2 * total;
}

std::int64_t local_h3_rank(const Arrangement& a) { return local_h3_rank(compute_l2(a)); }

DecomposabilityReport is_decomposable(const Arrangement& a, const EngineOptions& options) {
  DecomposabilityReport report;
  report.local_rank = local_h3_rank(a);
  report.h3_rank = holonomy_rank(a, 3, options);
  const auto group = h3_group(a, options);
  if (group.rank != report.h3_rank)
    throw std::logic_error("rank of h_3 over Z and over Q disagree: " + std::to_string(group.rank) + " vs " +
                           std::to_string(report.h3_rank));
  report.torsion = group.torsion;
  report.rational = report.h3_rank == report.local_rank;
  report.integral = report.rational && group.torsion_free();
  return report;
}

GradedRanks infinitesimal_alexander_dims(const Arrangement& a, std::size_t kmax, const EngineOptions& options,
                                         AlexanderRoute route) {
  return route == AlexanderRoute::metabelian ? alexander_metabelian(a, kmax, options)
                                             : alexander_lyndon(a, kmax, options);
}

}  // namespace arr
