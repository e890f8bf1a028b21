#include <doctest.h>

#include <algorithm>
#include <random>

#include "arr/arrangement.hpp"
#include "arr/catalog.hpp"
#include "arr/errors.hpp"
#include "arr/exact.hpp"
#include "arr/parse.hpp"
#include "support.hpp"

using namespace arr;
using testing::ints;

namespace {

std::vector<std::vector<std::size_t>> members_of(const L2Lattice& l2) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& f : l2.flats) out.push_back(f.members);
  return out;
}

std::vector<std::int64_t> sorted_mobius(const L2Lattice& l2) {
  std::vector<std::int64_t> out;
  for (const auto& f : l2.flats) out.push_back(f.mobius);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Arrangement> catalog() {
  return {builtin("braid", {3}), builtin("x3"), builtin("x2"), builtin("nonpappus"), builtin("pappus"),
          builtin("split_solvable", {2, 3}), builtin("split_solvable", {2, 2}), builtin("graphic", {0, 1, 1, 2, 2, 0, 2, 3})};
}

}  // namespace

TEST_CASE("exact scalars") {
  CHECK(parse_scalar("3/6") == mpq_class(1, 2));
  CHECK(parse_scalar("-4") == -4);
  CHECK(to_string(parse_scalar("-6/4")) == "-3/2");
  CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
  CHECK_THROWS_AS(parse_scalar("1.5"), ParseError);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(2, 3) == 0);
  CHECK(binomial(40, 20) == 137846528820);
}

TEST_CASE("arrangement invariants are checked on construction") {
  CHECK_THROWS_AS(Arrangement(2, {ints({0, 0})}), DomainError);
  CHECK_THROWS_AS(Arrangement(2, {ints({1, 2}), ints({2, 4})}), DomainError);
  CHECK_THROWS_AS(Arrangement(2, {}), DomainError);
  CHECK_THROWS_AS(Arrangement(2, {ints({1, 2, 3})}), DomainError);
  CHECK(canonical_form(ints({0, -2, 4})) == ints({0, 1, -2}));
}

TEST_CASE("polynomial parser") {
  const auto a = parse_arrangement("xyz(x+y)(x+z)(y+z)");
  REQUIRE(a.size() == 6);
  CHECK(a.ambient_dim() == 3);
  CHECK(a.normal(0) == ints({1, 0, 0}));
  CHECK(a.normal(3) == ints({1, 1, 0}));
  CHECK(a.normal(4) == ints({1, 0, 1}));
  CHECK(a.normal(5) == ints({0, 1, 1}));

  const auto single = parse_arrangement("x");
  CHECK(single.size() == 1);
  CHECK(single.normal(0) == ints({1}));

  auto kind_of = [](const char* text) {
    try {
      parse_arrangement(text);
    } catch (const ParseError& e) {
      return std::string(to_string(e.kind()));
    }
    return std::string("ok");
  };
  CHECK(kind_of("(x+y)(x+y)") == "duplicate");
  CHECK(kind_of("(x+y)(2x+2y)") == "duplicate");
  CHECK(kind_of("(x+1)y") == "nonlinear");
  CHECK(kind_of("(x*y)") == "nonlinear");
  CHECK(kind_of("(x-x)y") == "zero_form");
  CHECK(kind_of("(x+") == "syntax");

  const auto starred = parse_arrangement("x*y*(x - 2y)");
  CHECK(starred.normal(2) == ints({1, -2}));
  const auto rational = parse_arrangement("(x + 1/2 y)z");
  CHECK(rational.normal(0) == Normal{mpq_class(1), mpq_class(1, 2), mpq_class(0)});
  const auto header = parse_arrangement("vars: z, y, x\nxyz");
  CHECK(header.normal(0) == ints({0, 0, 1}));
  CHECK(header.variables() == std::vector<std::string>{"z", "y", "x"});
}

TEST_CASE("JSON input and round trip") {
  const auto a = parse_arrangement(R"({"variables":["x","y","z"],"normals":[[1,0,0],[0,1,0],["1/2",1,0]]})");
  CHECK(a.normal(2) == Normal{mpq_class(1, 2), mpq_class(1), mpq_class(0)});
  const auto bare = parse_arrangement("[[1,0],[0,1],[1,1]]");
  CHECK(bare.size() == 3);
  CHECK_THROWS_AS(parse_arrangement("[[1,0],[2,0]]"), ParseError);
  CHECK_THROWS_AS(parse_arrangement("[[1.5,0]]"), ParseError);
  for (const auto& arr : catalog()) {
    const auto again = parse_arrangement(to_json(arr).dump());
    CHECK(again == arr);
  }
}

TEST_CASE("catalog entries") {
  const auto braid = builtin("braid", {3});
  CHECK(braid == parse_arrangement("(x+y)(x-y)(x+z)(x-z)(y+z)(y-z)"));
  CHECK(builtin("braid") == braid);
  CHECK(builtin("nonpappus") == parse_arrangement("xyz(x+y)(y+z)(x+3z)(x+2y+z)(x+2y+3z)(2x+3y+3z)"));
  CHECK(builtin("x3") == parse_arrangement("xyz(x+y)(x+z)(y+z)"));
  CHECK(builtin("x2") == parse_arrangement("xyz(y-z)(x-z)(x+y)(x+y-2z)"));
  CHECK_THROWS_AS(builtin("nope"), CatalogError);
  CHECK_THROWS_AS(builtin("braid", {2}), CatalogError);
  CHECK_THROWS_AS(builtin("split_solvable", {1, 3}), CatalogError);
  CHECK_THROWS_AS(builtin("graphic", {0, 0}), Error);
  CHECK_THROWS_AS(builtin("x3", {1}), CatalogError);

  const auto ss = builtin("split_solvable", {2, 2});
  CHECK(ss.size() == 5);
  const auto l2 = compute_l2(ss);
  CHECK(std::count_if(l2.flats.begin(), l2.flats.end(), [](const Flat2& f) { return f.mobius == 2; }) == 2);
  CHECK(l2.max_mobius() == 2);
  const auto ss23 = compute_l2(builtin("split_solvable", {2, 3}));
  CHECK(ss23.multiple_points().size() == 2);
  CHECK(ss23.max_mobius() == 3);

  // Braid of rank 4 is the graphic arrangement of K5.
  CHECK(builtin("braid", {4}).size() == 10);
}

TEST_CASE("rank-2 flats") {
  const auto braid = compute_l2(builtin("braid", {3}));
  // 1-based {136, 145, 235, 246, 12, 34, 56}
  const std::vector<std::vector<std::size_t>> expected{{0, 1}, {0, 2, 5}, {0, 3, 4}, {1, 2, 4},
                                                       {1, 3, 5}, {2, 3}, {4, 5}};
  CHECK(members_of(braid) == expected);

  const auto x3 = compute_l2(builtin("x3"));
  const auto mp = x3.multiple_points();
  REQUIRE(mp.size() == 3);
  CHECK(mp[0].members == std::vector<std::size_t>{0, 1, 3});
  CHECK(mp[1].members == std::vector<std::size_t>{0, 2, 4});
  CHECK(mp[2].members == std::vector<std::size_t>{1, 2, 5});

  const auto x2 = compute_l2(builtin("x2")).multiple_points();
  const std::vector<std::vector<std::size_t>> x2_expected{{0, 1, 5}, {0, 2, 4}, {1, 2, 3}, {2, 5, 6}, {3, 4, 6}};
  std::vector<std::vector<std::size_t>> x2_members;
  for (const auto& f : x2) x2_members.push_back(f.members);
  CHECK(x2_members == x2_expected);

  const auto np = compute_l2(builtin("nonpappus")).multiple_points();
  const std::vector<std::vector<std::size_t>> np_expected{{0, 1, 3}, {0, 2, 5}, {0, 4, 8}, {1, 2, 4}, {1, 5, 7},
                                                          {2, 6, 7}, {3, 4, 6}, {3, 7, 8}, {5, 6, 8}};
  std::vector<std::vector<std::size_t>> np_members;
  for (const auto& f : np) np_members.push_back(f.members);
  CHECK(np_members == np_expected);

  const auto pappus = compute_l2(builtin("pappus"));
  CHECK(pappus.multiple_points().size() == 9);
  CHECK(sorted_mobius(pappus) == sorted_mobius(compute_l2(builtin("nonpappus"))));

  const auto generic = compute_l2(Arrangement(3, {ints({1, 0, 0}), ints({0, 1, 0}), ints({0, 0, 1})}));
  CHECK(generic.flats.size() == 3);
  CHECK(compute_l2(Arrangement(1, {ints({1})})).flats.empty());

  CHECK(braid.find(std::vector<std::size_t>{0, 2, 5}) == 1);
  CHECK(braid.find(std::vector<std::size_t>{0, 2}) == -1);
}

TEST_CASE("mobius and betti") {
  CHECK(mobius2(Flat2{{0, 2, 5}, 2}) == 2);
  CHECK(mobius2(Flat2{{0, 1}, 1}) == 1);
  CHECK(mobius2(Flat2{{0, 1, 2, 3, 4, 5, 6, 7, 8}, 8}) == 8);

  CHECK(betti(builtin("braid", {3})).b2 == 11);
  CHECK(betti(Arrangement(1, {ints({1})})).b1 == 1);
  CHECK(betti(Arrangement(1, {ints({1})})).b2 == 0);
  const auto np = compute_l2(builtin("nonpappus"));
  const auto doubles = np.flats.size() - np.multiple_points().size();
  CHECK(betti(np).b2 == static_cast<std::int64_t>(9 * 2 + doubles));

  CHECK(arrangement_rank(builtin("braid", {3})) == 3);
  CHECK(arrangement_rank(Arrangement(1, {ints({1})})) == 1);
  CHECK(arrangement_rank(product(testing::pencil(3), testing::pencil(2))) == 4);
}

TEST_CASE("betti agrees with deletion-restriction") {
  std::mt19937_64 rng(7);
  auto cases = catalog();
  for (int i = 0; i < 40; ++i) cases.push_back(testing::random_rank3(rng, 4 + i % 5));
  cases.push_back(product(builtin("x3"), testing::pencil(3)));
  for (const auto& a : cases) {
    CAPTURE(to_json(a).dump());
    CHECK(betti(a).b2 == testing::b2_deletion_restriction(a.normals()));
  }
}

TEST_CASE("flats agree with brute force and cover every pair once") {
  std::mt19937_64 rng(11);
  std::vector<Arrangement> cases = catalog();
  for (int i = 0; i < 60; ++i) cases.push_back(testing::random_rank3(rng, 3 + i % 7));
  for (const auto& a : cases) {
    const auto l2 = compute_l2(a);
    std::int64_t pairs = 0;
    for (const auto& f : l2.flats) {
      CHECK(f.mobius == static_cast<std::int64_t>(f.members.size()) - 1);
      pairs += binomial(static_cast<std::int64_t>(f.members.size()), 2);
    }
    CHECK(pairs == binomial(static_cast<std::int64_t>(a.size()), 2));
    if (a.ambient_dim() == 3) {
      const auto brute = testing::brute_flats3(a);
      const auto mine = members_of(l2);
      CHECK(std::set<std::vector<std::size_t>>(mine.begin(), mine.end()) == brute);
    }
  }
}

TEST_CASE("relabeling permutes flats") {
  std::mt19937_64 rng(5);
  for (const auto& a : catalog()) {
    std::vector<std::size_t> perm(a.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Normal> normals;
    for (auto p : perm) normals.push_back(a.normal(p));
    const Arrangement b(a.ambient_dim(), normals);
    const auto la = compute_l2(a), lb = compute_l2(b);
    CHECK(sorted_mobius(la) == sorted_mobius(lb));
    for (const auto& f : lb.flats) {
      std::vector<std::size_t> back;
      for (auto i : f.members) back.push_back(perm[i]);
      std::sort(back.begin(), back.end());
      CHECK(la.find(back) >= 0);
    }
  }
}

TEST_CASE("products") {
  const auto p = product(testing::pencil(3), testing::pencil(2));
  CHECK(p.size() == 5);
  CHECK(p.ambient_dim() == 4);
  const auto l2 = compute_l2(p);
  std::size_t triple = 0, inner_double = 0, cross = 0;
  for (const auto& f : l2.flats) {
    const bool left = f.members.back() < 3, right = f.members.front() >= 3;
    if (left && f.mobius == 2) ++triple;
    if (right && f.mobius == 1) ++inner_double;
    if (!left && !right) ++cross;
  }
  CHECK(triple == 1);
  CHECK(inner_double == 1);
  CHECK(cross == 6);

  const auto b = builtin("braid", {3});
  const auto bb = product(b, b);
  CHECK(bb.size() == 12);
  CHECK(compute_l2(bb).multiple_points().size() == 8);

  const auto with_line = product(b, Arrangement(1, {ints({1})}));
  CHECK(with_line.size() == 7);
  const auto lw = compute_l2(with_line);
  for (const auto& f : lw.flats)
    if (f.members.back() == 6) CHECK(f.mobius == 1);

  // Restricting to A's indices reproduces A's flats.
  const auto x3 = builtin("x3");
  const auto lx = compute_l2(product(x3, b));
  std::vector<std::vector<std::size_t>> inner;
  for (const auto& f : lx.flats)
    if (f.members.back() < x3.size()) inner.push_back(f.members);
  CHECK(inner == members_of(compute_l2(x3)));
}

TEST_CASE("localization") {
  const auto b = builtin("braid", {3});
  const auto l2 = compute_l2(b);
  const auto loc = localization(b, l2.flats[1]);
  CHECK(loc.size() == 3);
  CHECK(loc.labels() == std::vector<std::string>{b.labels()[0], b.labels()[2], b.labels()[5]});
  const auto inner = compute_l2(loc);
  REQUIRE(inner.flats.size() == 1);
  CHECK(inner.flats[0].mobius == 2);
  CHECK(localization(b, l2.flats[0]).size() == 2);
  CHECK_THROWS_AS(localization(b, Flat2{{0, 2}, 1}), DomainError);

  const auto np = builtin("nonpappus");
  for (const auto& f : compute_l2(np).flats) {
    const auto sub = compute_l2(localization(np, f));
    REQUIRE(sub.flats.size() == 1);
    CHECK(sub.flats[0].mobius == f.mobius);
  }
}

TEST_CASE("graphic arrangements") {
  const auto k3 = compute_l2(graphic_arrangement(SimpleGraph::complete(3)));
  REQUIRE(k3.flats.size() == 1);
  CHECK(k3.flats[0].mobius == 2);
  const auto k4 = compute_l2(graphic_arrangement(SimpleGraph::complete(4)));
  CHECK(k4.multiple_points().size() == 4);
  CHECK(k4.flats.size() == 7);
  const auto path = graphic_arrangement(SimpleGraph(3, {{0, 1}, {1, 2}}));
  CHECK(path.size() == 2);
  CHECK(compute_l2(path).flats.size() == 1);
  CHECK(graphic_arrangement(SimpleGraph(3, {{2, 1}, {0, 1}})).normal(0) == ints({1, -1, 0}));
  CHECK_THROWS_AS(SimpleGraph(3, {{1, 1}}), DomainError);
  CHECK_THROWS_AS(SimpleGraph(3, {{0, 1}, {1, 0}}), DomainError);
}

TEST_CASE("multi-arrangements") {
  const auto b = builtin("braid", {3});
  const MultiArrangement ma(b, {2, 4, 6, 2, 2, 2});
  CHECK(ma.total_multiplicity() == 18);
  CHECK_FALSE(ma.connected());
  CHECK(MultiArrangement(b, {1, 2, 2, 2, 2, 2}).connected());
  CHECK_THROWS_AS(MultiArrangement(b, {1, 1}), DomainError);
  CHECK_THROWS_AS(MultiArrangement(b, {0, 1, 1, 1, 1, 1}), DomainError);
}
