#pragma once

// Integer arithmetic for the formal-patching numerical hypothesis and the
// tame Riemann-Hurwitz feasibility filter.

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"

namespace wildcert {

class PatchingError : public std::runtime_error {
 public:
  explicit PatchingError(const std::string &msg) : std::runtime_error(msg) {}
};

struct PatchingParams {
  int p = 0;
  int m = 1;        // tame order, coprime to p
  int m_prime = 1;  // order of the prime-to-p part of the center of I
  int h1_prime = 1; // conductor lower bound, coprime to p
  int h2 = 1;       // conductor of the I-extension, coprime to p
  long long gamma = 0;
  long long h1 = 0;  // gamma * h2
  long long e = 0;   // h1*m + h2 = (gamma*m + 1)*h2

  void assert_invariants() const {
    auto fail = [](const std::string &what) {
      throw PatchingError("patching invariant violated: " + what);
    };
    if (gcd_ll(gamma, p) != 1) fail("gcd(gamma, p) = 1");
    if (gcd_ll(gamma, m) != 1) fail("gcd(gamma, m) = 1");
    if ((gamma * m + 1) % p == 0) fail("p does not divide gamma*m + 1");
    if (gamma * h2 < h1_prime) fail("gamma*h2 >= h1'");
    if (h1 != gamma * h2) fail("h1 = gamma*h2");
    if (e != h1 * m + h2 || e != (gamma * m + 1) * h2) fail("e = h1*m + h2 = (gamma*m+1)*h2");
    if (gcd_ll(e, m) != m_prime) fail("gcd(e, m) = m'");
    if (e % p == 0) fail("p does not divide e");
    if (gcd_ll(m, e / gcd_ll(h1, h2)) != 1) fail("gcd(m, e/gcd(h1,h2)) = 1");
  }
};

namespace detail {

inline void check_gamma_preconditions(int p, int m, int h1_prime, int h2) {
  auto fail = [](const std::string &cond) {
    throw PatchingError("precondition failed: " + cond);
  };
  if (!is_prime(p)) fail("p is prime");
  if (m < 1) fail("m >= 1");
  if (h2 < 1) fail("h2 >= 1");
  if (h1_prime < 1) fail("h1' >= 1");
  if (gcd_ll(h2, p) != 1) fail("gcd(h2, p) = 1");
  if (gcd_ll(m, p) != 1) fail("gcd(m, p) = 1");
  if ((static_cast<long long>(h2) * (p - 1)) % m != 0) fail("m divides h2*(p-1)");
  if (gcd_ll(h1_prime, p) != 1) fail("gcd(h1', p) = 1");
}

}  // namespace detail

// Least gamma coprime to p and m with p not dividing gamma*m + 1 and
// gamma*h2 >= h1'. The scan is bounded: some residue in any window of
// 2*m*p consecutive admissible values qualifies.
inline long long solve_gamma(int p, int m, int h1_prime, int h2) {
  detail::check_gamma_preconditions(p, m, h1_prime, h2);
  long long bound = static_cast<long long>(h1_prime) + 2LL * m * p + 2;
  for (long long gamma = 1; gamma <= bound; ++gamma) {
    if (gcd_ll(gamma, p) != 1) continue;
    if (gcd_ll(gamma, m) != 1) continue;
    if ((gamma * m + 1) % p == 0) continue;
    if (gamma * h2 < h1_prime) continue;
    return gamma;
  }
  throw PatchingError("no admissible gamma found within the scan bound");
}

inline PatchingParams derive_params(int p, int m, int m_prime, int h1_prime, int h2) {
  detail::check_gamma_preconditions(p, m, h1_prime, h2);
  if (gcd_ll(h2, m) != m_prime)
    throw PatchingError("precondition failed: gcd(h2, m) = m' (got gcd = " +
                        std::to_string(gcd_ll(h2, m)) + ", m' = " + std::to_string(m_prime) + ")");
  PatchingParams params;
  params.p = p;
  params.m = m;
  params.m_prime = m_prime;
  params.h1_prime = h1_prime;
  params.h2 = h2;
  params.gamma = solve_gamma(p, m, h1_prime, h2);
  params.h1 = params.gamma * h2;
  params.e = params.h1 * m + h2;
  params.assert_invariants();
  return params;
}

struct RamificationProfile {
  int degree = 1;
  int base_genus = 0;
  std::vector<std::vector<int>> branch_fibers;  // ramification indices per fiber
};

struct RiemannHurwitzResult {
  long long two_g_minus_2 = 0;
  bool feasible = false;
  std::string reason;
};

// 2g_Y - 2 = n*(2g_X - 2) + sum of (e_i - 1), tame case. Infeasible when the
// result drops below -2 or has odd parity.
inline RiemannHurwitzResult riemann_hurwitz_tame(const RamificationProfile &profile) {
  if (profile.degree < 1) throw PatchingError("degree must be positive");
  long long total = static_cast<long long>(profile.degree) * (2LL * profile.base_genus - 2);
  for (const auto &fiber : profile.branch_fibers) {
    long long sum = 0;
    for (int e : fiber) {
      if (e < 1) throw PatchingError("ramification indices must be >= 1");
      sum += e;
      total += e - 1;
    }
    if (sum != profile.degree)
      throw PatchingError("fiber indices sum to " + std::to_string(sum) + ", expected degree " +
                          std::to_string(profile.degree));
  }
  RiemannHurwitzResult r;
  r.two_g_minus_2 = total;
  if (total < -2) {
    r.feasible = false;
    r.reason = "2g-2 below -2";
  } else if (total % 2 != 0) {
    r.feasible = false;
    r.reason = "odd parity";
  } else {
    r.feasible = true;
  }
  return r;
}

}  // namespace wildcert
