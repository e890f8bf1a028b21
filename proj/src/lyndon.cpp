#include "arr/lyndon.hpp"

#include <gmpxx.h>

#include "arr/errors.hpp"

namespace arr::lie {

namespace {

std::int64_t mobius(std::uint64_t n) {
  std::int64_t result = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

void add_scaled(LieElement& into, const LieElement& from, std::int64_t scale) {
  for (const auto& [w, c] : from) {
    auto [it, inserted] = into.emplace(w, c * scale);
    if (!inserted) {
      it->second += c * scale;
      if (it->second == 0) into.erase(it);
    }
  }
}

}  // namespace

std::uint64_t lyndon_count(std::uint64_t n, std::uint64_t k) {
  if (k == 0) return 0;
  mpz_class total = 0, power;
  for (std::uint64_t d = 1; d <= k; ++d) {
    if (k % d) continue;
    const std::int64_t mu = mobius(d);
    if (mu == 0) continue;
    mpz_ui_pow_ui(power.get_mpz_t(), n, k / d);
    total += mu * power;
  }
  total /= static_cast<unsigned long>(k);
  if (!total.fits_ulong_p()) return ~std::uint64_t{0};
  return total.get_ui();
}

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w.compare(i, Word::npos, w) <= 0) return false;
  return true;
}

std::size_t standard_split(const Word& w) {
  if (w.size() < 2) throw DomainError("standard factorization needs a word of length >= 2");
  for (std::size_t i = 1; i < w.size(); ++i)
    if (is_lyndon(w.substr(i))) return i;
  return w.size() - 1;  // the last letter is always Lyndon
}

std::ptrdiff_t LyndonBasis::index_of(const Word& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
}

LyndonBasis lyndon_basis(std::size_t n, std::size_t k, std::size_t ceiling) {
  if (n == 0 || k == 0) throw DomainError("lyndon_basis needs n >= 1 and k >= 1");
  if (n > 200) throw ResourceError("alphabets larger than 200 letters are not supported");
  const std::uint64_t expected = lyndon_count(n, k);
  if (expected > ceiling)
    throw ResourceError("Lie_" + std::to_string(k) + " on " + std::to_string(n) + " generators has " +
                        std::to_string(expected) + " basis words, above the ceiling of " + std::to_string(ceiling));
  LyndonBasis basis;
  basis.n = n;
  basis.degree = k;
  basis.words.reserve(expected);
  // Duval's generation of Lyndon words of length <= k, in lexicographic order.
  std::vector<int> w{-1};
  const int top = static_cast<int>(n) - 1;
  while (!w.empty()) {
    ++w.back();
    const std::size_t m = w.size();
    if (m == k) {
      Word word;
      for (int c : w) word.push_back(static_cast<char>(c));
      basis.words.push_back(std::move(word));
    }
    while (w.size() < k) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == top) w.pop_back();
  }
  for (std::size_t i = 0; i < basis.words.size(); ++i) {
    basis.index_.emplace(basis.words[i], i);
    basis.split.push_back(k >= 2 ? standard_split(basis.words[i]) : 0);
  }
  return basis;
}

BracketTree BracketTree::generator(std::size_t index) {
  BracketTree t;
  t.letter = index;
  return t;
}

BracketTree BracketTree::bracket(BracketTree left, BracketTree right) {
  BracketTree t;
  t.left = std::make_shared<const BracketTree>(std::move(left));
  t.right = std::make_shared<const BracketTree>(std::move(right));
  return t;
}

std::size_t BracketTree::degree() const { return is_leaf() ? 1 : left->degree() + right->degree(); }

FreeLieAlgebra::FreeLieAlgebra(std::size_t generators, std::size_t ceiling) : n_(generators), ceiling_(ceiling) {
  if (n_ == 0 || n_ > 200) throw DomainError("free Lie algebra needs 1..200 generators");
}

const LyndonBasis& FreeLieAlgebra::basis(std::size_t degree) {
  auto it = bases_.find(degree);
  if (it == bases_.end()) it = bases_.emplace(degree, lyndon_basis(n_, degree, ceiling_)).first;
  return it->second;
}

const LieElement& FreeLieAlgebra::bracket_basis(const Word& u, const Word& v) {
  std::string key = u;
  key.push_back('\xff');
  key += v;
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  LieElement result;
  if (u == v) {
    // [P_u, P_u] = 0
  } else if (v < u) {
    add_scaled(result, bracket_basis(v, u), -1);
  } else if (u.size() == 1) {
    result.emplace(u + v, 1);
  } else {
    const std::size_t s = standard_split(u);
    const Word u1 = u.substr(0, s), u2 = u.substr(s);
    if (!(u2 < v)) {
      result.emplace(u + v, 1);
    } else {
      // [[u1, u2], v] = [u1, [u2, v]] + [[u1, v], u2]
      const LieElement inner_right = bracket_basis(u2, v);
      result = bracket(LieElement{{u1, 1}}, inner_right);
      const LieElement inner_left = bracket_basis(u1, v);
      add_scaled(result, bracket(inner_left, LieElement{{u2, 1}}), 1);
    }
  }
  return memo_.emplace(std::move(key), std::move(result)).first->second;
}

LieElement FreeLieAlgebra::bracket(const LieElement& a, const LieElement& b) {
  LieElement out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      if (wa == wb) continue;
      const LieElement term = bracket_basis(wa, wb);
      add_scaled(out, term, ca * cb);
    }
  return out;
}

LieElement FreeLieAlgebra::expand(const BracketTree& tree) {
  if (tree.is_leaf()) {
    if (tree.letter >= n_) throw DomainError("generator index out of range");
    return LieElement{{Word(1, static_cast<char>(tree.letter)), 1}};
  }
  return bracket(expand(*tree.left), expand(*tree.right));
}

linalg::IntRow FreeLieAlgebra::coordinates(const LieElement& e, std::size_t degree) {
  const LyndonBasis& b = basis(degree);
  linalg::IntRow row;
  row.reserve(e.size());
  for (const auto& [w, c] : e) {
    if (c == 0) continue;
    const std::ptrdiff_t idx = b.index_of(w);
    if (idx < 0) throw DomainError("element is not homogeneous of degree " + std::to_string(degree));
    row.emplace_back(static_cast<std::uint32_t>(idx), c);
  }
  linalg::normalize(row);
  return row;
}

LieElement FreeLieAlgebra::basis_element(std::size_t degree, std::size_t index) {
  return LieElement{{basis(degree).words.at(index), 1}};
}

const linalg::IntRow& FreeLieAlgebra::ad_generator(std::size_t i, std::size_t degree, std::size_t word_index) {
  auto& per_generator = ad_[degree];
  if (per_generator.empty()) per_generator.resize(n_);
  auto& cache = per_generator.at(i);
  if (auto it = cache.find(word_index); it != cache.end()) return it->second;
  const Word& w = basis(degree).words.at(word_index);
  linalg::IntRow row = coordinates(bracket_basis(Word(1, static_cast<char>(i)), w), degree + 1);
  return cache.emplace(word_index, std::move(row)).first->second;
}

linalg::IntRow expand_bracket(const BracketTree& tree, std::size_t n, std::size_t k) {
  if (tree.degree() != k)
    throw DomainError("bracket has degree " + std::to_string(tree.degree()) + ", expected " + std::to_string(k));
  FreeLieAlgebra algebra(n);
  return algebra.coordinates(algebra.expand(tree), k);
}

}  // namespace arr::lie
