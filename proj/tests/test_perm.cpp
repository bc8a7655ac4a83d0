#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "wildcert/perm.hpp"

using namespace wildcert;

TEST_CASE("cycle parsing") {
  SECTION("disjoint cycles") {
    Perm p = parse_cycles("(1 2 3)(4 5)", 5);
    REQUIRE(p.images() == std::vector<int>{2, 3, 1, 5, 4});
  }
  SECTION("empty string is the identity") {
    REQUIRE(parse_cycles("", 4).is_identity());
    REQUIRE(parse_cycles("()", 4).is_identity());
  }
  SECTION("non-disjoint cycles compose left to right") {
    Perm p = parse_cycles("(1 2)(2 3)", 3);
    REQUIRE(p == parse_cycles("(1 3 2)", 3));
  }
  SECTION("commas and whitespace are tolerated") {
    REQUIRE(parse_cycles("(1, 2, 3) (4,5)", 5) == parse_cycles("(1 2 3)(4 5)", 5));
  }
  SECTION("errors") {
    REQUIRE_THROWS_AS(parse_cycles("(1 6)", 5), PermError);
    REQUIRE_THROWS_AS(parse_cycles("(1 2 1)", 5), PermError);
    REQUIRE_THROWS_AS(parse_cycles("(1 2", 5), PermError);
    REQUIRE_THROWS_AS(parse_cycles("(1 x)", 5), PermError);
  }
}

TEST_CASE("canonical printing round-trips") {
  const char *cases[] = {"(1 2 3)(4 5)", "(1 4)(2 5)(3 6)", "()", "(2 3 6)"};
  for (const char *c : cases) {
    Perm p = parse_cycles(c, 6);
    REQUIRE(parse_cycles(p.cycle_string(), 6) == p);
  }
  REQUIRE(parse_cycles("(3 1 2)", 3).cycle_string() == "(1 2 3)");
  REQUIRE(Perm::identity(4).cycle_string() == "()");
}

TEST_CASE("composition, inverse, conjugation") {
  SECTION("group axioms hold on samples") {
    Perm a = parse_cycles("(1 2 3)(4 5)", 6);
    Perm b = parse_cycles("(2 4 6)", 6);
    Perm c = parse_cycles("(1 6)", 6);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * a.inverse() == Perm::identity(6));
    REQUIRE(a.inverse() * a == Perm::identity(6));
  }
  SECTION("degree mismatch is an error") {
    REQUIRE_THROWS_AS(parse_cycles("(1 2)", 3) * parse_cycles("(1 2)", 4), PermError);
  }
  SECTION("conjugation carries the first block cycle to the second") {
    Perm g = parse_cycles("(1 2 3)", 6);
    Perm h = parse_cycles("(1 4)(2 5)(3 6)", 6);
    REQUIRE(conjugate(g, h) == parse_cycles("(4 5 6)", 6));
  }
  SECTION("conjugation by the identity") {
    Perm g = parse_cycles("(1 3 5)", 5);
    REQUIRE(conjugate(g, Perm::identity(5)) == g);
  }
  SECTION("an order-3 cycle is squared by conjugation with the swap") {
    Perm sigma = parse_cycles("(1 2 5)", 5);
    Perm tau = parse_cycles("(1 2)", 5);
    REQUIRE(conjugate(sigma, tau) == sigma * sigma);
    REQUIRE(conjugate(sigma, tau) == parse_cycles("(1 5 2)", 5));
  }
  SECTION("conjugation preserves cycle type") {
    Perm g = parse_cycles("(1 2 3 4)(5 6)", 7);
    Perm h = parse_cycles("(1 7 3)(2 5)", 7);
    REQUIRE(conjugate(g, h).cycle_type() == g.cycle_type());
  }
}

TEST_CASE("order, sign, cycle type") {
  Perm g = parse_cycles("(1 2 3)(4 5)", 5);
  REQUIRE(g.order() == 6);
  REQUIRE(g.sign() == -1);
  REQUIRE(g.cycle_type() == std::vector<int>{2, 3});
  REQUIRE(Perm::identity(3).order() == 1);
  REQUIRE(Perm::identity(3).sign() == 1);
  REQUIRE(parse_cycles("(1 2 3 4)(5 6)", 6).sign() == 1);
}

TEST_CASE("sign is a homomorphism on random samples") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> ia(8), ib(8);
    std::iota(ia.begin(), ia.end(), 1);
    std::iota(ib.begin(), ib.end(), 1);
    std::shuffle(ia.begin(), ia.end(), rng);
    std::shuffle(ib.begin(), ib.end(), rng);
    Perm a = Perm::from_images(ia), b = Perm::from_images(ib);
    REQUIRE((a * b).sign() == a.sign() * b.sign());
  }
}

TEST_CASE("p-part") {
  SECTION("canonical 3-component of a (3,2) element") {
    Perm g = parse_cycles("(1 2 3)(4 5)", 5);
    REQUIRE(p_part(g, 3) == parse_cycles("(1 2 3)", 5));
    REQUIRE(p_part(g, 2) == parse_cycles("(4 5)", 5));
  }
  SECTION("coprime order gives the identity") {
    REQUIRE(p_part(parse_cycles("(1 2)", 3), 3).is_identity());
  }
  SECTION("properties on random elements") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<int> im(9);
      std::iota(im.begin(), im.end(), 1);
      std::shuffle(im.begin(), im.end(), rng);
      Perm g = Perm::from_images(im);
      for (int p : {2, 3, 5, 7}) {
        Perm h = p_part(g, p);
        unsigned long long o = h.order();
        while (o % p == 0) o /= p;
        REQUIRE(o == 1);           // p-power order
        REQUIRE(g * h == h * g);   // commutes with g
        REQUIRE((h.order() == 1) == (g.order() % p != 0));
      }
    }
  }
}

TEST_CASE("witness order follows canonical cycle decompositions") {
  Perm a = parse_cycles("(1 2)", 5);
  Perm b = parse_cycles("(2 3)", 5);
  Perm c = parse_cycles("(1 3)", 5);
  REQUIRE(witness_less(a, b));
  REQUIRE(witness_less(c, b));
  REQUIRE(witness_less(a, c));
  REQUIRE(witness_less(Perm::identity(5), a));
}
