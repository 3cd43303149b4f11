#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcc {

using u64 = std::uint64_t;
using i64 = std::int64_t;

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 a, u64 e, u64 m);

/// b^e, throws std::overflow_error if the result does not fit in 64 bits.
u64 ipow(u64 b, unsigned e);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(u64 n);

/// Distinct prime divisors in ascending order (trial division).
std::vector<u64> prime_factors(u64 n);

u64 euler_phi(u64 n);

/// Least tau >= 1 with a^tau = 1 mod m. Throws std::invalid_argument unless
/// gcd(a, m) = 1 and m >= 2.
u64 mult_order(u64 a, u64 m);

/// Smallest g >= 2 generating Z*_{p^k}.
u64 find_primitive_root(u64 p, unsigned k);

bool is_primitive_root(u64 g, u64 modulus);

/// Unique x in [0, m1*m2) with x = r1 mod m1 and x = r2 mod m2.
u64 crt_solve(u64 r1, u64 m1, u64 r2, u64 m2);

/// +1 for a quadratic residue mod the odd prime p, -1 for a non-residue,
/// 0 when p | a (Euler's criterion).
int legendre(u64 a, u64 p);

/// Quadratic residues and non-residues of Z*_{p^k}, both sorted.
struct QRSets {
  u64 p = 0;
  unsigned modulus_exponent = 0;
  u64 modulus = 0;
  std::vector<u64> residues;
  std::vector<u64> nonresidues;

  bool is_residue(u64 x) const { return legendre(x % p, p) == 1; }
};

QRSets quadratic_residue_sets(u64 p, unsigned k);

/// The standing hypotheses on (p, q, s, t, l, g).
enum class Hypothesis {
  not_prime,
  not_distinct,
  bad_exponent,
  p_not_3_mod_4,
  gcd_not_two,
  order_mod_ps,
  order_mod_qt,
  order_mod_n,
  bad_common_root,
  too_large,
};

const char* to_string(Hypothesis h);

class HypothesisError : public std::invalid_argument {
 public:
  HypothesisError(Hypothesis which, const std::string& detail);
  Hypothesis which() const noexcept { return which_; }

 private:
  Hypothesis which_;
};

/// Validated (p, q, s, t, l) together with the common primitive root g and
/// the CRT element v (v = 1 mod p^s, v = g mod q^t).
struct Parameters {
  u64 p = 0, q = 0;
  unsigned s = 0, t = 0;
  u64 l = 0;
  u64 n = 0;
  u64 g1 = 0, g2 = 0, g = 0, v = 0;
  bool qr_case = false;  // q is a quadratic residue mod p

  u64 pow_p(unsigned e) const { return ipow(p, e); }
  u64 pow_q(unsigned e) const { return ipow(q, e); }
  /// phi(p^e), with phi(p^0) = 1.
  u64 phi_p(unsigned e) const { return e == 0 ? 1 : ipow(p, e - 1) * (p - 1); }
  u64 phi_q(unsigned e) const { return e == 0 ? 1 : ipow(q, e - 1) * (q - 1); }
  u64 phi_n() const { return phi_p(s) * phi_q(t); }
};

/// Largest n accepted by validate_parameters.
inline constexpr u64 kMaxLength = u64{1} << 40;

Parameters validate_parameters(u64 p, u64 q, unsigned s, unsigned t, u64 l,
                               std::optional<u64> g = std::nullopt);

}  // namespace mcc
