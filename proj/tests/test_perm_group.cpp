#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "testutil.hpp"
#include "wildcert/perm_group.hpp"

using namespace wildcert;

TEST_CASE("orders of groups from generators") {
  SECTION("A5 from standard generators") {
    PermGroup g(5, {parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(1 2 3)", 5)});
    REQUIRE(g.order() == 60);
  }
  SECTION("block product with a swap has order 18") {
    PermGroup g(6, {parse_cycles("(1 2 3)", 6), parse_cycles("(4 5 6)", 6),
                    parse_cycles("(1 4)(2 5)(3 6)", 6)});
    REQUIRE(g.order() == 18);
  }
  SECTION("empty generating set gives the trivial group") {
    PermGroup g = PermGroup::trivial(4);
    REQUIRE(g.order() == 1);
    REQUIRE(g.contains(Perm::identity(4)));
    REQUIRE_FALSE(g.contains(parse_cycles("(1 2)", 4)));
  }
  SECTION("S6") {
    REQUIRE(symmetric_group(6).order() == 720);
  }
  SECTION("order is independent of generator ordering") {
    std::vector<Perm> gens{parse_cycles("(1 2)", 6), parse_cycles("(1 2 3 4 5 6)", 6)};
    PermGroup a(6, gens);
    std::swap(gens[0], gens[1]);
    PermGroup b(6, gens);
    REQUIRE(a.order() == b.order());
  }
  SECTION("degree mismatch among generators") {
    REQUIRE_THROWS_AS(PermGroup(5, {parse_cycles("(1 2)", 5), parse_cycles("(1 2)", 4)}),
                      GroupError);
  }
}

TEST_CASE("membership") {
  PermGroup a5 = alternating_group(5);
  REQUIRE_FALSE(a5.contains(parse_cycles("(1 2)", 5)));
  REQUIRE(a5.contains(parse_cycles("(1 2)(3 4)", 5)));

  PermGroup c4(4, {parse_cycles("(1 2 3 4)", 4)});
  REQUIRE(c4.contains(parse_cycles("(1 3)(2 4)", 4)));
  REQUIRE_FALSE(c4.contains(parse_cycles("(1 2)", 4)));

  SECTION("all generators are members") {
    PermGroup g(7, {parse_cycles("(1 2 3)(4 5)", 7), parse_cycles("(2 6 7)", 7)});
    for (const Perm &x : g.generators()) REQUIRE(g.contains(x));
  }
  SECTION("membership is stable under products and inverses") {
    PermGroup g(6, {parse_cycles("(1 2 3)(4 5 6)", 6), parse_cycles("(1 4)(2 5)(3 6)", 6)});
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
      Perm a = g.random_element(rng), b = g.random_element(rng);
      REQUIRE(g.contains(a * b));
      REQUIRE(g.contains(a.inverse()));
    }
  }
}

TEST_CASE("chain order equals brute-force closure on random small groups") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 4 + static_cast<int>(rng() % 5);  // 4..8
    int k = 1 + static_cast<int>(rng() % 3);
    std::vector<Perm> gens;
    for (int i = 0; i < k; ++i) {
      std::vector<int> im(n);
      std::iota(im.begin(), im.end(), 1);
      std::shuffle(im.begin(), im.end(), rng);
      gens.push_back(Perm::from_images(im));
    }
    PermGroup g(n, gens);
    auto closure = testutil::brute_closure(n, gens);
    REQUIRE(g.order() == static_cast<long long>(closure.size()));
    // membership agrees on a few pushed-around elements
    for (int t = 0; t < 10; ++t) {
      std::vector<int> im(n);
      std::iota(im.begin(), im.end(), 1);
      std::shuffle(im.begin(), im.end(), rng);
      Perm candidate = Perm::from_images(im);
      bool brute = std::find(closure.begin(), closure.end(), candidate) != closure.end();
      REQUIRE(g.contains(candidate) == brute);
    }
  }
}

TEST_CASE("element enumeration") {
  PermGroup s4 = symmetric_group(4);
  auto els = s4.elements();
  REQUIRE(els.size() == 24);
  std::set<std::vector<int>> dedup;
  for (const Perm &e : els) dedup.insert(e.images());
  REQUIRE(dedup.size() == 24);

  SECTION("bound is enforced") {
    REQUIRE_THROWS_AS(symmetric_group(11).elements(1000000), EnumerationOverBound);
  }
}

TEST_CASE("random elements are members and deterministic per seed") {
  PermGroup g = alternating_group(6);
  REQUIRE(g.random_element(42) == g.random_element(42));
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) REQUIRE(g.contains(g.random_element(rng)));
}

TEST_CASE("orbits and transitivity") {
  PermGroup g(5, {parse_cycles("(1 2 3)", 5)});
  REQUIRE(g.orbit(4) == std::vector<int>{4});
  REQUIRE(g.orbit(1) == std::vector<int>{1, 2, 3});
  REQUIRE_FALSE(g.is_transitive());
  REQUIRE(PermGroup(5, {parse_cycles("(1 2 3 4 5)", 5)}).is_transitive());
  PermGroup h(6, {parse_cycles("(1 2 3)", 6), parse_cycles("(4 5 6)", 6)});
  REQUIRE_FALSE(h.is_transitive());
  REQUIRE(h.orbits().size() == 2);
  REQUIRE_THROWS_AS(g.orbit(0), GroupError);
  REQUIRE_THROWS_AS(g.orbit(6), GroupError);
}

TEST_CASE("pointwise stabilizer") {
  PermGroup s5 = symmetric_group(5);
  PermGroup stab = s5.pointwise_stabilizer({1, 2});
  REQUIRE(stab.order() == 6);  // S3 on {3,4,5}
  for (const Perm &g : stab.generators()) {
    REQUIRE(g(1) == 1);
    REQUIRE(g(2) == 2);
  }
  PermGroup diag(6, {parse_cycles("(1 2 3)(4 5 6)", 6)});
  REQUIRE(diag.pointwise_stabilizer({4}).is_trivial());
}

TEST_CASE("named families") {
  REQUIRE(symmetric_group(1).order() == 1);
  REQUIRE(symmetric_group(2).order() == 2);
  REQUIRE(alternating_group(3).order() == 3);
  REQUIRE(alternating_group(4).order() == 12);
  REQUIRE(alternating_group(6).order() == 360);
  REQUIRE(alternating_group(7).order() == 2520);
  REQUIRE(cyclic_group(6).order() == 6);
  REQUIRE(symmetric_group(9).order() == 362880);
  PermGroup a8 = alternating_group(8);
  for (const Perm &g : a8.generators()) REQUIRE(g.is_even());
}
