#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <span>
#include <vector>

#include "mcc/numtheory.hpp"

namespace mcc::gf {

using BigInt = boost::multiprecision::cpp_int;

/// Arithmetic on residues in [0, l) for a prime l.
class PrimeField {
 public:
  explicit PrimeField(u64 l);

  u64 order() const { return l_; }
  u64 from_int(i64 value) const;
  u64 add(u64 a, u64 b) const { return a + b >= l_ ? a + b - l_ : a + b; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + l_ - b; }
  u64 neg(u64 a) const { return a == 0 ? 0 : l_ - a; }
  u64 mul(u64 a, u64 b) const { return mulmod(a, b, l_); }
  u64 pow(u64 a, u64 e) const { return powmod(a, e, l_); }
  /// Throws std::domain_error on zero.
  u64 inv(u64 a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  u64 l_;
};

/// Dense polynomial over F_l, ascending coefficients. The zero polynomial is
/// the empty vector; all helpers return trimmed results.
using Poly = std::vector<u64>;

namespace poly {

void trim(Poly& a);
/// Degree, or -1 for the zero polynomial.
long degree(const Poly& a);
Poly add(const PrimeField& f, const Poly& a, const Poly& b);
Poly sub(const PrimeField& f, const Poly& a, const Poly& b);
Poly mul(const PrimeField& f, const Poly& a, const Poly& b);
Poly scale(const PrimeField& f, const Poly& a, u64 c);
/// Quotient and remainder; divisor must be nonzero.
std::pair<Poly, Poly> divmod(const PrimeField& f, const Poly& a, const Poly& b);
Poly mod(const PrimeField& f, const Poly& a, const Poly& b);
/// Monic gcd.
Poly gcd(const PrimeField& f, Poly a, Poly b);
Poly powmod(const PrimeField& f, Poly base, const BigInt& e, const Poly& modulus);
/// x^n - 1.
Poly x_pow_minus_one(const PrimeField& f, u64 n);
bool is_irreducible(const PrimeField& f, const Poly& monic);

}  // namespace poly

/// Smallest monic irreducible of degree m, where candidates are ordered by the
/// base-l number whose digits, most significant first, are (c_{m-1}, ..., c_0).
Poly find_irreducible(u64 l, unsigned m);

/// Element of F_{l^m}: coefficient vector of length m in the polynomial basis.
struct ExtElement {
  std::vector<u64> coeffs;
  bool operator==(const ExtElement&) const = default;
  auto operator<=>(const ExtElement&) const = default;
};

/// F_l[x] / (modulus) for a monic irreducible modulus of degree m.
class ExtField {
 public:
  ExtField(u64 l, unsigned m);
  ExtField(u64 l, Poly modulus);

  const PrimeField& base() const { return base_; }
  u64 characteristic() const { return base_.order(); }
  unsigned degree() const { return m_; }
  const Poly& modulus() const { return modulus_; }

  ExtElement zero() const;
  ExtElement one() const;
  ExtElement scalar(u64 c) const;
  /// The element whose coefficients are the base-l digits of index.
  ExtElement from_index(u64 index) const;

  ExtElement add(const ExtElement& a, const ExtElement& b) const;
  ExtElement sub(const ExtElement& a, const ExtElement& b) const;
  ExtElement neg(const ExtElement& a) const;
  ExtElement mul(const ExtElement& a, const ExtElement& b) const;
  ExtElement scale(const ExtElement& a, u64 c) const;
  /// a += c * b
  void add_scaled(ExtElement& a, const ExtElement& b, u64 c) const;
  ExtElement pow(const ExtElement& a, u64 e) const;
  ExtElement pow(const ExtElement& a, const BigInt& e) const;

  bool is_zero(const ExtElement& a) const;
  bool is_scalar(const ExtElement& a) const;
  /// Prime-field value of a; throws VerificationError when a is not a scalar.
  u64 scalar_value(const ExtElement& a) const;

 private:
  PrimeField base_;
  unsigned m_;
  Poly modulus_;
};

/// Raised when a quantity that must lie in the prime field does not, or a
/// similar internal consistency check fails.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// alpha of multiplicative order exactly n: the alpha_index-th distinct value
/// accepted by the deterministic candidate search b^((l^m - 1)/n),
/// b = from_index(1), from_index(2), ...
ExtElement primitive_nth_root(const Parameters& params, const ExtField& ext, unsigned alpha_index = 0);

struct GaussData {
  ExtElement alpha;
  ExtElement beta;  // alpha^(p^{s-1} q^t), a primitive p-th root of unity
  u64 residue_sum = 0;     // sum of beta^x over quadratic residues x mod p
  u64 nonresidue_sum = 0;  // sum of beta^x over non-residues
  u64 delta = 0;           // delta^2 = -p; 2R + 1 for odd l, 1 for l = 2
};

/// Computes the Gauss sums from alpha and checks R + N = -1, RN = (p+1)/4 and
/// the delta relations.
GaussData gauss_data(const Parameters& params, const ExtField& ext, const ExtElement& alpha);

/// The splitting field of x^n - 1 with a fixed alpha and its powers.
struct SplittingField {
  ExtField field;
  GaussData gauss;
  std::vector<ExtElement> alpha_powers;  // alpha^0 .. alpha^(n-1)

  const ExtElement& alpha_pow(u64 e) const { return alpha_powers[e % alpha_powers.size()]; }
};

SplittingField build_splitting_field(const Parameters& params, unsigned alpha_index = 0);

}  // namespace mcc::gf
