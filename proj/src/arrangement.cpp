#include "arr/arrangement.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "arr/errors.hpp"

namespace arr {

Normal canonical_form(const Normal& v) {
  auto lead = std::find_if(v.begin(), v.end(), [](const ExactScalar& x) { return x != 0; });
  if (lead == v.end()) throw DomainError("zero vector has no canonical form");
  ExactScalar scale = *lead;
  Normal out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x / scale);
  return out;
}

Arrangement::Arrangement(std::size_t ambient_dim, std::vector<Normal> normals, std::vector<std::string> labels,
                         std::vector<std::string> variables)
    : ambient_dim_(ambient_dim), normals_(std::move(normals)), labels_(std::move(labels)),
      variables_(std::move(variables)) {
  if (ambient_dim_ == 0) throw DomainError("ambient dimension must be positive");
  if (normals_.empty()) throw DomainError("an arrangement needs at least one hyperplane");
  if (labels_.empty())
    for (std::size_t i = 0; i < normals_.size(); ++i) labels_.push_back("H" + std::to_string(i + 1));
  if (variables_.empty())
    for (std::size_t i = 0; i < ambient_dim_; ++i) variables_.push_back("x" + std::to_string(i + 1));
  if (labels_.size() != normals_.size()) throw DomainError("label count differs from hyperplane count");
  if (variables_.size() != ambient_dim_) throw DomainError("variable count differs from ambient dimension");

  std::set<Normal> seen;
  for (std::size_t i = 0; i < normals_.size(); ++i) {
    if (normals_[i].size() != ambient_dim_)
      throw DomainError("normal " + std::to_string(i + 1) + " has wrong length");
    if (std::all_of(normals_[i].begin(), normals_[i].end(), [](const ExactScalar& x) { return x == 0; }))
      throw DomainError("normal " + std::to_string(i + 1) + " is zero");
    if (!seen.insert(canonical_form(normals_[i])).second)
      throw DomainError("hyperplane " + std::to_string(i + 1) + " repeats an earlier one");
  }
}

Arrangement Arrangement::subarrangement(std::span<const std::size_t> indices) const {
  std::vector<Normal> normals;
  std::vector<std::string> labels;
  for (std::size_t i : indices) {
    normals.push_back(normals_.at(i));
    labels.push_back(labels_.at(i));
  }
  return Arrangement(ambient_dim_, std::move(normals), std::move(labels), variables_);
}

std::ptrdiff_t L2Lattice::find(std::span<const std::size_t> members) const {
  for (std::size_t i = 0; i < flats.size(); ++i)
    if (std::equal(flats[i].members.begin(), flats[i].members.end(), members.begin(), members.end()))
      return static_cast<std::ptrdiff_t>(i);
  return -1;
}

std::vector<Flat2> L2Lattice::multiple_points() const {
  std::vector<Flat2> out;
  std::copy_if(flats.begin(), flats.end(), std::back_inserter(out), [](const Flat2& f) { return f.mobius >= 2; });
  return out;
}

std::int64_t L2Lattice::max_mobius() const {
  std::int64_t m = 0;
  for (const auto& f : flats) m = std::max(m, f.mobius);
  return m;
}

MultiArrangement::MultiArrangement(Arrangement arrangement_, std::vector<std::int64_t> multiplicities_)
    : arrangement(std::move(arrangement_)), multiplicities(std::move(multiplicities_)) {
  if (multiplicities.size() != arrangement.size())
    throw DomainError("need one multiplicity per hyperplane");
  for (auto m : multiplicities)
    if (m <= 0) throw DomainError("multiplicities must be positive");
}

std::int64_t MultiArrangement::total_multiplicity() const {
  return std::accumulate(multiplicities.begin(), multiplicities.end(), std::int64_t{0});
}

bool MultiArrangement::connected() const {
  std::int64_t g = 0;
  for (auto m : multiplicities) g = std::gcd(g, m);
  return g == 1;
}

SimpleGraph::SimpleGraph(std::size_t vertex_count, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : vertex_count_(vertex_count), adjacency_(vertex_count, std::vector<bool>(vertex_count, false)) {
  if (vertex_count_ == 0) throw DomainError("a graph needs at least one vertex");
  for (auto [u, v] : edges) {
    if (u >= vertex_count_ || v >= vertex_count_) throw DomainError("edge endpoint out of range");
    if (u == v) throw DomainError("loops are not allowed");
    if (u > v) std::swap(u, v);
    if (adjacency_[u][v]) throw DomainError("duplicate edge");
    adjacency_[u][v] = adjacency_[v][u] = true;
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
}

bool SimpleGraph::adjacent(std::size_t u, std::size_t v) const {
  return u < vertex_count_ && v < vertex_count_ && adjacency_[u][v];
}

SimpleGraph SimpleGraph::complete(std::size_t vertices) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < vertices; ++i)
    for (std::size_t j = i + 1; j < vertices; ++j) edges.emplace_back(i, j);
  return SimpleGraph(vertices, std::move(edges));
}

namespace {

// Row-reduces rows in place; returns the rank.
std::size_t eliminate(std::vector<Normal>& m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      ExactScalar f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Two-row reduced basis of span(a, b), pivots in increasing columns.
struct PlaneTest {
  std::vector<Normal> rows;
  std::vector<std::size_t> pivots;

  PlaneTest(const Normal& a, const Normal& b) : rows{a, b} {
    eliminate(rows);
    for (const auto& r : rows) {
      auto it = std::find_if(r.begin(), r.end(), [](const ExactScalar& x) { return x != 0; });
      pivots.push_back(static_cast<std::size_t>(it - r.begin()));
    }
  }

  bool contains(const Normal& v) const {
    Normal w = v;
    for (std::size_t r = 0; r < 2; ++r) {
      if (w[pivots[r]] == 0) continue;
      ExactScalar f = w[pivots[r]] / rows[r][pivots[r]];
      for (std::size_t j = 0; j < w.size(); ++j) w[j] -= f * rows[r][j];
    }
    return std::all_of(w.begin(), w.end(), [](const ExactScalar& x) { return x == 0; });
  }
};

}  // namespace

std::size_t rational_rank(std::span<const Normal> rows) {
  std::vector<Normal> m(rows.begin(), rows.end());
  return eliminate(m);
}

std::size_t arrangement_rank(const Arrangement& a) { return rational_rank(a.normals()); }

L2Lattice compute_l2(const Arrangement& a) {
  const std::size_t n = a.size();
  std::vector<Normal> canon;
  canon.reserve(n);
  for (const auto& v : a.normals()) canon.push_back(canonical_form(v));

  std::vector<std::vector<bool>> covered(n, std::vector<bool>(n, false));
  L2Lattice l2;
  l2.n = n;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (covered[i][j]) continue;
      PlaneTest plane(canon[i], canon[j]);
      Flat2 flat;
      for (std::size_t k = 0; k < n; ++k)
        if (k == i || k == j || plane.contains(canon[k])) flat.members.push_back(k);
      for (std::size_t x : flat.members)
        for (std::size_t y : flat.members) covered[x][y] = true;
      flat.mobius = mobius2(flat);
      l2.flats.push_back(std::move(flat));
    }
  }
  std::sort(l2.flats.begin(), l2.flats.end(),
            [](const Flat2& x, const Flat2& y) { return x.members < y.members; });
  return l2;
}

BettiNumbers betti(const L2Lattice& l2) {
  BettiNumbers b;
  b.b1 = static_cast<std::int64_t>(l2.n);
  for (const auto& f : l2.flats) b.b2 += mobius2(f);
  return b;
}

BettiNumbers betti(const Arrangement& a) { return betti(compute_l2(a)); }

Arrangement product(const Arrangement& a, const Arrangement& b) {
  const std::size_t r = a.ambient_dim(), s = b.ambient_dim();
  std::vector<Normal> normals;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Normal v = a.normal(i);
    v.resize(r + s, ExactScalar(0));
    normals.push_back(std::move(v));
    labels.push_back(a.labels()[i]);
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    Normal v(r, ExactScalar(0));
    v.insert(v.end(), b.normal(i).begin(), b.normal(i).end());
    normals.push_back(std::move(v));
    labels.push_back(b.labels()[i]);
  }
  std::vector<std::string> variables = a.variables();
  variables.insert(variables.end(), b.variables().begin(), b.variables().end());
  // Colliding variable names would make the text form ambiguous.
  std::set<std::string> distinct(variables.begin(), variables.end());
  if (distinct.size() != variables.size()) variables.clear();
  return Arrangement(r + s, std::move(normals), std::move(labels), std::move(variables));
}

Arrangement localization(const Arrangement& a, const Flat2& f) {
  L2Lattice l2 = compute_l2(a);
  if (l2.find(f.members) < 0) throw DomainError("flat is not in the rank-2 lattice of the arrangement");
  return a.subarrangement(f.members);
}

Arrangement graphic_arrangement(const SimpleGraph& g) {
  if (g.edges().empty()) throw DomainError("graphic arrangement needs at least one edge");
  std::vector<Normal> normals;
  std::vector<std::string> labels, variables;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) variables.push_back("z" + std::to_string(v + 1));
  for (auto [u, v] : g.edges()) {
    Normal w(g.vertex_count(), ExactScalar(0));
    w[u] = 1;
    w[v] = -1;
    normals.push_back(std::move(w));
    labels.push_back("z" + std::to_string(u + 1) + "-z" + std::to_string(v + 1));
  }
  return Arrangement(g.vertex_count(), std::move(normals), std::move(labels), std::move(variables));
}

}  // namespace arr
