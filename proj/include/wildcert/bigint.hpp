#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace wildcert {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Exponent of the prime p in n.
inline int p_valuation(BigInt n, int p) {
  if (n == 0) return 0;
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

inline BigInt p_power_part(const BigInt &n, int p) {
  BigInt r = 1;
  BigInt m = n;
  while (m % p == 0) {
    m /= p;
    r *= p;
  }
  return r;
}

inline bool is_p_power(const BigInt &n, int p) {
  if (n < 1) return false;
  BigInt m = n;
  while (m % p == 0) m /= p;
  return m == 1;
}

inline std::string to_string(const BigInt &n) { return n.str(); }

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline long long gcd_ll(long long a, long long b) {
  while (b != 0) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

}  // namespace wildcert
