#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "arr/linalg.hpp"

namespace arr::lie {

/// A word over the alphabet {0, ..., n-1}; each char holds one letter.
using Word = std::string;

/// Finite linear combination of Lyndon basis elements, keyed by Lyndon word.
using LieElement = std::map<Word, std::int64_t>;

/// Number of Lyndon words of length k over n letters (Witt's formula).
std::uint64_t lyndon_count(std::uint64_t n, std::uint64_t k);

bool is_lyndon(const Word& w);

/// Split point of the standard factorization w = uv, v the longest proper
/// Lyndon suffix. Requires |w| >= 2.
std::size_t standard_split(const Word& w);

/// Lyndon words of one length, sorted lexicographically.
struct LyndonBasis {
  std::size_t n = 0;
  std::size_t degree = 0;
  std::vector<Word> words;
  /// words[i] = words[i].substr(0, split[i]) + words[i].substr(split[i]).
  std::vector<std::size_t> split;

  std::ptrdiff_t index_of(const Word& w) const;

 private:
  std::unordered_map<Word, std::size_t> index_;
  friend LyndonBasis lyndon_basis(std::size_t, std::size_t, std::size_t);
};

/// Throws ResourceError when the Witt count exceeds the ceiling.
LyndonBasis lyndon_basis(std::size_t n, std::size_t k, std::size_t ceiling = 200000);

/// Binary bracket tree over generators.
struct BracketTree {
  static BracketTree generator(std::size_t index);
  static BracketTree bracket(BracketTree left, BracketTree right);

  bool is_leaf() const { return !left; }
  std::size_t degree() const;

  std::size_t letter = 0;
  std::shared_ptr<const BracketTree> left;
  std::shared_ptr<const BracketTree> right;
};

/// Free Lie algebra on n generators with Lyndon-basis structure constants.
/// Brackets of basis elements are computed by the classical rewriting
///   [P_u, P_v] = P_uv                       if u < v and (u, v) is standard,
///   [P_u, P_v] = [P_u1, [P_u2, P_v]] + [[P_u1, P_v], P_u2]   otherwise,
/// with u = u1 u2 the standard factorization, and memoized.
///
/// Not thread-safe: the memo tables mutate on use.
class FreeLieAlgebra {
 public:
  explicit FreeLieAlgebra(std::size_t generators, std::size_t ceiling = 200000);

  std::size_t generators() const noexcept { return n_; }
  const LyndonBasis& basis(std::size_t degree);

  const LieElement& bracket_basis(const Word& u, const Word& v);
  LieElement bracket(const LieElement& a, const LieElement& b);
  LieElement expand(const BracketTree& tree);

  /// Coordinates of a homogeneous element of the given degree.
  linalg::IntRow coordinates(const LieElement& e, std::size_t degree);
  /// Basis element with the given index in the given degree.
  LieElement basis_element(std::size_t degree, std::size_t index);

  /// Coordinates of [x_i, P_w] for the w-th degree-d basis word, in degree d + 1.
  const linalg::IntRow& ad_generator(std::size_t i, std::size_t degree, std::size_t word_index);

 private:
  std::size_t n_;
  std::size_t ceiling_;
  std::map<std::size_t, LyndonBasis> bases_;
  std::unordered_map<std::string, LieElement> memo_;
  std::map<std::size_t, std::vector<std::unordered_map<std::size_t, linalg::IntRow>>> ad_;
};

/// Coordinates of a homogeneous bracket expression in the degree-k Lyndon basis.
/// Throws DomainError when the tree's degree is not k or a letter is out of range.
linalg::IntRow expand_bracket(const BracketTree& tree, std::size_t n, std::size_t k);

}  // namespace arr::lie
