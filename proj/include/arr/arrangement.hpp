#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "arr/exact.hpp"

namespace arr {

using Normal = std::vector<ExactScalar>;

/// Scales a nonzero vector so that its first nonzero entry is 1.
Normal canonical_form(const Normal& v);

/// Central arrangement of hyperplanes, each given by its normal vector.
///
/// Invariants, checked on construction: at least one hyperplane, all normals of
/// length ambient_dim(), no zero normal, no two proportional normals.
class Arrangement {
 public:
  /// Labels default to "H1", "H2", ...; variables default to "x1", "x2", ...
  Arrangement(std::size_t ambient_dim, std::vector<Normal> normals,
              std::vector<std::string> labels = {}, std::vector<std::string> variables = {});

  std::size_t size() const noexcept { return normals_.size(); }
  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  const std::vector<Normal>& normals() const noexcept { return normals_; }
  const Normal& normal(std::size_t i) const { return normals_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<std::string>& variables() const noexcept { return variables_; }

  /// Sub-arrangement on the given indices, in the given order.
  Arrangement subarrangement(std::span<const std::size_t> indices) const;

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  std::size_t ambient_dim_;
  std::vector<Normal> normals_;
  std::vector<std::string> labels_;
  std::vector<std::string> variables_;
};

/// Rank-2 flat: the hyperplanes containing a codimension-2 intersection.
struct Flat2 {
  std::vector<std::size_t> members;  // sorted, 0-based, size >= 2
  std::int64_t mobius = 1;           // members.size() - 1

  friend bool operator==(const Flat2&, const Flat2&) = default;
};

/// The rank-2 part of the intersection lattice, double points included.
struct L2Lattice {
  std::size_t n = 0;
  std::vector<Flat2> flats;  // sorted by member list

  /// Index of the flat with exactly these (sorted) members, or -1.
  std::ptrdiff_t find(std::span<const std::size_t> members) const;
  /// Flats with mobius >= 2.
  std::vector<Flat2> multiple_points() const;
  std::int64_t max_mobius() const;
};

struct MultiArrangement {
  MultiArrangement(Arrangement arrangement, std::vector<std::int64_t> multiplicities);

  Arrangement arrangement;
  std::vector<std::int64_t> multiplicities;  // positive

  std::int64_t total_multiplicity() const;
  /// gcd(m) == 1, i.e. the Milnor fiber is connected.
  bool connected() const;
};

/// Simple undirected graph on vertices 0..vertex_count-1.
class SimpleGraph {
 public:
  SimpleGraph(std::size_t vertex_count, std::vector<std::pair<std::size_t, std::size_t>> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  /// Edges as (u, v) with u < v, sorted lexicographically, no duplicates.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
  bool adjacent(std::size_t u, std::size_t v) const;

  static SimpleGraph complete(std::size_t vertices);

 private:
  std::size_t vertex_count_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<bool>> adjacency_;
};

L2Lattice compute_l2(const Arrangement& a);

inline std::int64_t mobius2(const Flat2& f) {
  return static_cast<std::int64_t>(f.members.size()) - 1;
}

struct BettiNumbers {
  std::int64_t b1 = 0;
  std::int64_t b2 = 0;
};

BettiNumbers betti(const Arrangement& a);
BettiNumbers betti(const L2Lattice& l2);

/// Rank over Q of the matrix of normals.
std::size_t arrangement_rank(const Arrangement& a);

/// Rank over Q of a list of rational vectors of common length.
std::size_t rational_rank(std::span<const Normal> rows);

/// Product arrangement in C^(r+s): A's hyperplanes (padded on the right) first.
Arrangement product(const Arrangement& a, const Arrangement& b);

/// Sub-arrangement of the hyperplanes containing the flat. Throws DomainError
/// when f is not a flat of a.
Arrangement localization(const Arrangement& a, const Flat2& f);

/// One hyperplane z_i - z_j per edge, in sorted edge order.
Arrangement graphic_arrangement(const SimpleGraph& g);

}  // namespace arr
