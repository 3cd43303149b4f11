#include "mcc/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

namespace mcc {

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  a %= m;
  while (e > 0) {
    if (e & 1) result = mulmod(result, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return result;
}

u64 ipow(u64 b, unsigned e) {
  u64 result = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (b != 0 && result > UINT64_MAX / b) throw std::overflow_error("ipow: 64-bit overflow");
    result *= b;
  }
  return result;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // These witnesses are sufficient for every n < 2^64.
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

u64 euler_phi(u64 n) {
  u64 result = n;
  for (u64 f : prime_factors(n)) result = result / f * (f - 1);
  return result;
}

u64 mult_order(u64 a, u64 m) {
  if (m < 2) throw std::invalid_argument("mult_order: modulus must be at least 2");
  if (std::gcd(a % m, m) != 1) {
    throw std::invalid_argument("mult_order: " + std::to_string(a) + " is not a unit mod " +
                                std::to_string(m));
  }
  u64 order = euler_phi(m);
  for (u64 f : prime_factors(order)) {
    while (order % f == 0 && powmod(a, order / f, m) == 1) order /= f;
  }
  return order;
}

bool is_primitive_root(u64 g, u64 modulus) {
  if (std::gcd(g % modulus, modulus) != 1) return false;
  return mult_order(g, modulus) == euler_phi(modulus);
}

u64 find_primitive_root(u64 p, unsigned k) {
  if (p < 3 || !is_prime(p) || k == 0) {
    throw std::invalid_argument("find_primitive_root: expects an odd prime and k >= 1");
  }
  const u64 modulus = ipow(p, k);
  for (u64 g = 2; g < modulus; ++g) {
    if (is_primitive_root(g, modulus)) return g;
  }
  throw std::logic_error("find_primitive_root: no primitive root found");
}

namespace {

// Returns (g, x) with a*x = g mod m.
std::pair<u64, u64> inverse_gcd(u64 a, u64 m) {
  i64 old_r = static_cast<i64>(a % m), r = static_cast<i64>(m);
  i64 old_s = 1, s = 0;
  while (r != 0) {
    i64 quotient = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - quotient * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - quotient * s);
  }
  i64 x = old_s % static_cast<i64>(m);
  if (x < 0) x += static_cast<i64>(m);
  return {static_cast<u64>(old_r), static_cast<u64>(x)};
}

}  // namespace

u64 crt_solve(u64 r1, u64 m1, u64 r2, u64 m2) {
  if (m1 == 0 || m2 == 0) throw std::invalid_argument("crt_solve: zero modulus");
  auto [gcd, inv] = inverse_gcd(m1 % m2, m2);
  if (gcd != 1) throw std::invalid_argument("crt_solve: moduli are not coprime");
  r1 %= m1;
  r2 %= m2;
  // x = r1 + m1 * ((r2 - r1) * m1^{-1} mod m2)
  const u64 diff = (r2 + m2 - r1 % m2) % m2;
  const u64 k = mulmod(diff, inv, m2);
  return r1 + m1 * k;
}

int legendre(u64 a, u64 p) {
  a %= p;
  if (a == 0) return 0;
  return powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

QRSets quadratic_residue_sets(u64 p, unsigned k) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("quadratic_residue_sets: p must be an odd prime");
  QRSets out;
  out.p = p;
  out.modulus_exponent = k;
  out.modulus = ipow(p, k);
  const u64 lifts = out.modulus / p;
  // x + p*lambda keeps the residue class of x mod p, so the sets are the
  // lifts of R_1 and N_1. Iterating lambda outermost yields sorted output.
  for (u64 lambda = 0; lambda < lifts; ++lambda) {
    for (u64 x = 1; x < p; ++x) {
      const u64 value = x + p * lambda;
      (legendre(x, p) == 1 ? out.residues : out.nonresidues).push_back(value);
    }
  }
  return out;
}

const char* to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::not_prime: return "p, q and l must be prime";
    case Hypothesis::not_distinct: return "p, q and l must be distinct";
    case Hypothesis::bad_exponent: return "s and t must be at least 1";
    case Hypothesis::p_not_3_mod_4: return "p ≡ 3 mod 4 required";
    case Hypothesis::gcd_not_two: return "gcd(φ(p^s), φ(q^t)) ≠ 2";
    case Hypothesis::order_mod_ps: return "ord_{p^s}(l) ≠ φ(p^s)/2";
    case Hypothesis::order_mod_qt: return "ord_{q^t}(l) ≠ φ(q^t)";
    case Hypothesis::order_mod_n: return "ord_n(l) ≠ φ(n)/2";
    case Hypothesis::bad_common_root: return "g is not a primitive root mod both p^s and q^t";
    case Hypothesis::too_large: return "n = p^s q^t is too large";
  }
  return "unknown hypothesis";
}

HypothesisError::HypothesisError(Hypothesis which, const std::string& detail)
    : std::invalid_argument(std::string(to_string(which)) + (detail.empty() ? "" : ": " + detail)),
      which_(which) {}

namespace {

std::string order_text(u64 a, u64 m, u64 got, u64 want) {
  std::ostringstream os;
  os << "ord_" << m << "(" << a << ") = " << got << ", expected " << want;
  return os.str();
}

}  // namespace

Parameters validate_parameters(u64 p, u64 q, unsigned s, unsigned t, u64 l, std::optional<u64> g) {
  for (u64 value : {p, q, l}) {
    if (!is_prime(value)) throw HypothesisError(Hypothesis::not_prime, std::to_string(value));
  }
  if (p == q || p == l || q == l) throw HypothesisError(Hypothesis::not_distinct, "");
  if (p == 2 || q == 2) throw HypothesisError(Hypothesis::not_prime, "p and q must be odd");
  if (s == 0 || t == 0) throw HypothesisError(Hypothesis::bad_exponent, "");
  if (p % 4 != 3) throw HypothesisError(Hypothesis::p_not_3_mod_4, "p = " + std::to_string(p));

  Parameters params;
  params.p = p;
  params.q = q;
  params.s = s;
  params.t = t;
  params.l = l;
  u64 ps = 0, qt = 0;
  try {
    ps = ipow(p, s);
    qt = ipow(q, t);
    if (ps > kMaxLength / qt) throw std::overflow_error("n");
    params.n = ps * qt;
  } catch (const std::overflow_error&) {
    throw HypothesisError(Hypothesis::too_large, "");
  }

  const u64 phi_ps = params.phi_p(s), phi_qt = params.phi_q(t);
  if (std::gcd(phi_ps, phi_qt) != 2) {
    throw HypothesisError(Hypothesis::gcd_not_two,
                          "gcd(" + std::to_string(phi_ps) + ", " + std::to_string(phi_qt) + ") = " +
                              std::to_string(std::gcd(phi_ps, phi_qt)));
  }
  if (u64 ord = mult_order(l, ps); ord != phi_ps / 2) {
    throw HypothesisError(Hypothesis::order_mod_ps, order_text(l, ps, ord, phi_ps / 2));
  }
  if (u64 ord = mult_order(l, qt); ord != phi_qt) {
    throw HypothesisError(Hypothesis::order_mod_qt, order_text(l, qt, ord, phi_qt));
  }
  if (u64 ord = mult_order(l, params.n); ord != params.phi_n() / 2) {
    throw HypothesisError(Hypothesis::order_mod_n, order_text(l, params.n, ord, params.phi_n() / 2));
  }

  if (g) {
    const u64 given = *g % params.n;
    if (!is_primitive_root(given, ps) || !is_primitive_root(given, qt)) {
      throw HypothesisError(Hypothesis::bad_common_root, "g = " + std::to_string(*g));
    }
    params.g1 = given % ps;
    params.g2 = given % qt;
    params.g = given;
  } else {
    params.g1 = find_primitive_root(p, s);
    params.g2 = find_primitive_root(q, t);
    params.g = crt_solve(params.g1, ps, params.g2, qt);
  }
  params.v = crt_solve(1, ps, params.g, qt);
  params.qr_case = legendre(q, p) == 1;
  return params;
}

}  // namespace mcc
