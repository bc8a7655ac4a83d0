#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "wildcert/patching.hpp"

using namespace wildcert;

TEST_CASE("solve_gamma scans to the least admissible value") {
  REQUIRE(solve_gamma(3, 2, 1, 1) == 5);
  REQUIRE(solve_gamma(5, 1, 2, 3) == 1);
  REQUIRE(solve_gamma(3, 2, 7, 1) == 11);

  SECTION("minimality by independent rescan") {
    std::mt19937_64 rng(9);
    int checked = 0;
    while (checked < 200) {
      int p = std::vector<int>{3, 5, 7, 11, 13}[rng() % 5];
      int h2 = 1 + static_cast<int>(rng() % 40);
      if (h2 % p == 0) continue;
      // m must divide h2*(p-1) and be coprime to p
      long long target = static_cast<long long>(h2) * (p - 1);
      std::vector<int> divisors;
      for (int m = 1; m <= target && m <= 60; ++m)
        if (target % m == 0 && gcd_ll(m, p) == 1) divisors.push_back(m);
      int m = divisors[rng() % divisors.size()];
      int h1p = 1 + static_cast<int>(rng() % 50);
      if (h1p % p == 0) continue;
      long long gamma = solve_gamma(p, m, h1p, h2);
      for (long long g = 1; g < gamma; ++g) {
        bool admissible = gcd_ll(g, p) == 1 && gcd_ll(g, m) == 1 && (g * m + 1) % p != 0 &&
                          g * h2 >= h1p;
        REQUIRE_FALSE(admissible);
      }
      ++checked;
    }
  }

  SECTION("named precondition failures") {
    REQUIRE_THROWS_WITH(solve_gamma(4, 1, 1, 1), Catch::Matchers::ContainsSubstring("p is prime"));
    REQUIRE_THROWS_WITH(solve_gamma(3, 3, 1, 1), Catch::Matchers::ContainsSubstring("gcd(m, p)"));
    REQUIRE_THROWS_WITH(solve_gamma(3, 2, 1, 3), Catch::Matchers::ContainsSubstring("gcd(h2, p)"));
    REQUIRE_THROWS_WITH(solve_gamma(3, 4, 1, 1), Catch::Matchers::ContainsSubstring("m divides h2*(p-1)"));
    REQUIRE_THROWS_WITH(solve_gamma(5, 1, 5, 1), Catch::Matchers::ContainsSubstring("gcd(h1', p)"));
  }
}

TEST_CASE("derive_params") {
  SECTION("worked examples") {
    PatchingParams a = derive_params(3, 2, 1, 1, 1);
    REQUIRE(a.gamma == 5);
    REQUIRE(a.h1 == 5);
    REQUIRE(a.e == 11);
    PatchingParams b = derive_params(5, 1, 1, 2, 3);
    REQUIRE(b.gamma == 1);
    REQUIRE(b.h1 == 3);
    REQUIRE(b.e == 6);
    for (int p : {3, 5, 7}) {
      PatchingParams c = derive_params(p, 1, 1, 1, 1);
      REQUIRE(c.gamma == 1);
      REQUIRE(c.h1 == 1);
      REQUIRE(c.e == 2);
    }
  }
  SECTION("m' must match gcd(h2, m)") {
    REQUIRE_THROWS_AS(derive_params(3, 2, 2, 1, 1), PatchingError);
    REQUIRE(derive_params(3, 2, 2, 1, 4).m_prime == 2);
  }
  SECTION("all concluding conditions hold for random admissible inputs") {
    std::mt19937_64 rng(123);
    int done = 0;
    while (done < 500) {
      int p = std::vector<int>{3, 5, 7, 11, 13}[rng() % 5];
      int h2 = 1 + static_cast<int>(rng() % 60);
      if (h2 % p == 0) continue;
      long long target = static_cast<long long>(h2) * (p - 1);
      std::vector<int> ms;
      for (int m = 1; m <= 80; ++m)
        if (target % m == 0 && gcd_ll(m, p) == 1) ms.push_back(m);
      int m = ms[rng() % ms.size()];
      int h1p = 1 + static_cast<int>(rng() % 80);
      if (h1p % p == 0) continue;
      PatchingParams params = derive_params(p, m, static_cast<int>(gcd_ll(h2, m)), h1p, h2);
      params.assert_invariants();  // throws on any violation
      ++done;
    }
  }
}

TEST_CASE("tame riemann-hurwitz") {
  SECTION("degree-24 cover with six points of index 4 cannot exist") {
    RamificationProfile prof{24, 0, {{4, 4, 4, 4, 4, 4}}};
    auto r = riemann_hurwitz_tame(prof);
    REQUIRE(r.two_g_minus_2 == -30);
    REQUIRE_FALSE(r.feasible);
  }
  SECTION("degree-2 cover branched at two points is the projective line") {
    RamificationProfile prof{2, 0, {{2}, {2}}};
    auto r = riemann_hurwitz_tame(prof);
    REQUIRE(r.two_g_minus_2 == -2);
    REQUIRE(r.feasible);
  }
  SECTION("unbranched covers of the line need degree one") {
    for (int n : {1, 2, 5}) {
      RamificationProfile prof{n, 0, {}};
      auto r = riemann_hurwitz_tame(prof);
      REQUIRE(r.two_g_minus_2 == -2 * n);
      REQUIRE(r.feasible == (n == 1));
    }
  }
  SECTION("feasible results are always even") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 300; ++t) {
      int degree = 2 + static_cast<int>(rng() % 10);
      RamificationProfile prof{degree, static_cast<int>(rng() % 3), {}};
      int fibers = static_cast<int>(rng() % 3);
      for (int f = 0; f < fibers; ++f) {
        std::vector<int> fiber;
        int rest = degree;
        while (rest > 0) {
          int e = 1 + static_cast<int>(rng() % rest);
          fiber.push_back(e);
          rest -= e;
        }
        prof.branch_fibers.push_back(fiber);
      }
      auto r = riemann_hurwitz_tame(prof);
      if (r.feasible) REQUIRE(r.two_g_minus_2 % 2 == 0);
    }
  }
  SECTION("fiber sum must match the degree") {
    RamificationProfile bad{4, 0, {{2, 3}}};
    REQUIRE_THROWS_AS(riemann_hurwitz_tame(bad), PatchingError);
  }
}
