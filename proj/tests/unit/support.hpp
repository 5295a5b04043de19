#pragma once

#include <cstdint>
#include <random>

#include "trident/curve.hpp"

namespace trident::oracle {

inline Rat random_rat(std::mt19937_64& g, long num, long den) {
  std::uniform_int_distribution<long> n(-num, num), d(1, den);
  return make_rat(n(g), d(g));
}

inline Rat random_nonzero(std::mt19937_64& g, long num, long den) {
  for (;;) {
    Rat q = random_rat(g, num, den);
    if (q != 0) return q;
  }
}

inline long mod(const Rat& q, long p) {
  // Only called on integral coefficients.
  Int r = q.get_num() % p;
  long v = r.get_si();
  return v < 0 ? v + p : v;
}

/// #E(F_p) by checking every (x, y) pair.
inline long brute_force_count(const CurveQ& E, long p) {
  long a1 = mod(E.a1(), p), a2 = mod(E.a2(), p), a3 = mod(E.a3(), p), a4 = mod(E.a4(), p), a6 = mod(E.a6(), p);
  long n = 1;
  for (long x = 0; x < p; ++x) {
    for (long y = 0; y < p; ++y) {
      long lhs = (y * y + a1 * x % p * y + a3 * y) % p;
      long rhs = (((x * x % p) * x) % p + a2 * (x * x % p) + a4 * x + a6) % p;
      if ((lhs - rhs) % p == 0) ++n;
    }
  }
  return n;
}

}  // namespace trident::oracle
