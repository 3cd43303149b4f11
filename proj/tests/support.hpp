#pragma once

#include <array>
#include <set>
#include <vector>

#include "mcc/numtheory.hpp"

namespace mcc::test {

struct Tuple {
  u64 p, q;
  unsigned s, t;
  u64 l;
  std::optional<u64> g;
};

// (11,5,1,1,3) QR case; (7,5,1,1,2) QNR case; s = 2; t = 2.
inline const std::array<Tuple, 4> kTuples{{
    {11, 5, 1, 1, 3, 2},
    {7, 5, 1, 1, 2, 3},
    {7, 5, 2, 1, 2, std::nullopt},
    {3, 5, 1, 2, 13, std::nullopt},
}};

inline Parameters params_of(const Tuple& t) { return validate_parameters(t.p, t.q, t.s, t.t, t.l, t.g); }

// Valid tuples with n <= max_n and small primes, found by trying everything.
inline std::vector<Parameters> small_tuples(u64 max_n, u64 max_prime = 50) {
  std::vector<Parameters> out;
  for (u64 p = 3; p <= max_prime; ++p) {
    for (u64 q = 3; q <= max_prime; ++q) {
      for (unsigned s = 1; s <= 3; ++s) {
        for (unsigned t = 1; t <= 3; ++t) {
          for (u64 l = 2; l <= max_prime; ++l) {
            if (!is_prime(p) || !is_prime(q) || !is_prime(l)) continue;
            long double n = 1;
            for (unsigned k = 0; k < s; ++k) n *= p;
            for (unsigned k = 0; k < t; ++k) n *= q;
            if (n > max_n) continue;
            try {
              out.push_back(validate_parameters(p, q, s, t, l));
            } catch (const HypothesisError&) {
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace mcc::test
