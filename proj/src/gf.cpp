#include "mcc/gf.hpp"

#include <set>
#include <string>

namespace mcc::gf {

PrimeField::PrimeField(u64 l) : l_(l) {
  if (!is_prime(l)) throw std::invalid_argument("PrimeField: order " + std::to_string(l) + " is not prime");
}

u64 PrimeField::from_int(i64 value) const {
  const i64 m = static_cast<i64>(l_);
  i64 r = value % m;
  if (r < 0) r += m;
  return static_cast<u64>(r);
}

u64 PrimeField::inv(u64 a) const {
  if (a % l_ == 0) throw std::domain_error("PrimeField::inv: zero has no inverse");
  return powmod(a, l_ - 2, l_);
}

namespace poly {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long degree(const Poly& a) {
  for (std::size_t i = a.size(); i > 0; --i) {
    if (a[i - 1] != 0) return static_cast<long>(i - 1);
  }
  return -1;
}

Poly add(const PrimeField& f, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = f.add(out[i], b[i]);
  trim(out);
  return out;
}

Poly sub(const PrimeField& f, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = f.sub(out[i], b[i]);
  trim(out);
  return out;
}

Poly mul(const PrimeField& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  }
  trim(out);
  return out;
}

Poly scale(const PrimeField& f, const Poly& a, u64 c) {
  Poly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(a[i], c);
  trim(out);
  return out;
}

std::pair<Poly, Poly> divmod(const PrimeField& f, const Poly& a, const Poly& b) {
  const long db = degree(b);
  if (db < 0) throw std::domain_error("poly::divmod: division by zero polynomial");
  Poly rem = a;
  trim(rem);
  const long da = degree(rem);
  if (da < db) return {Poly{}, rem};
  Poly quot(static_cast<std::size_t>(da - db + 1), 0);
  const u64 lead_inv = f.inv(b[static_cast<std::size_t>(db)]);
  for (long i = da; i >= db; --i) {
    const u64 c = f.mul(rem[static_cast<std::size_t>(i)], lead_inv);
    if (c == 0) continue;
    quot[static_cast<std::size_t>(i - db)] = c;
    for (long k = 0; k <= db; ++k) {
      auto& slot = rem[static_cast<std::size_t>(i - db + k)];
      slot = f.sub(slot, f.mul(c, b[static_cast<std::size_t>(k)]));
    }
  }
  trim(quot);
  trim(rem);
  return {quot, rem};
}

Poly mod(const PrimeField& f, const Poly& a, const Poly& b) { return divmod(f, a, b).second; }

Poly gcd(const PrimeField& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) a = scale(f, a, f.inv(a.back()));
  return a;
}

Poly powmod(const PrimeField& f, Poly base, const BigInt& e, const Poly& modulus) {
  Poly result{1};
  result = mod(f, result, modulus);
  base = mod(f, base, modulus);
  const auto bits = e == 0 ? 0u : static_cast<unsigned>(boost::multiprecision::msb(e)) + 1;
  for (unsigned i = bits; i > 0; --i) {
    result = mod(f, mul(f, result, result), modulus);
    if (boost::multiprecision::bit_test(e, i - 1)) result = mod(f, mul(f, result, base), modulus);
  }
  return result;
}

Poly x_pow_minus_one(const PrimeField& f, u64 n) {
  Poly out(n + 1, 0);
  out[0] = f.neg(1);
  out[n] = 1;
  return out;
}

bool is_irreducible(const PrimeField& f, const Poly& monic) {
  const long m = degree(monic);
  if (m < 1) return false;
  if (m == 1) return true;
  const Poly x{0, 1};
  const BigInt l = f.order();
  // frob[k] = x^(l^k) mod f
  std::vector<Poly> frob{mod(f, x, monic)};
  for (long k = 1; k <= m; ++k) frob.push_back(powmod(f, frob.back(), l, monic));
  if (sub(f, frob[static_cast<std::size_t>(m)], x) != Poly{}) return false;
  for (u64 r : prime_factors(static_cast<u64>(m))) {
    const Poly g = gcd(f, sub(f, frob[static_cast<std::size_t>(m / static_cast<long>(r))], x), monic);
    if (degree(g) != 0) return false;
  }
  return true;
}

}  // namespace poly

Poly find_irreducible(u64 l, unsigned m) {
  if (m == 0) throw std::invalid_argument("find_irreducible: degree must be positive");
  const PrimeField f(l);
  for (u64 index = 0;; ++index) {
    Poly candidate(m + 1, 0);
    candidate[m] = 1;
    u64 rest = index;
    for (unsigned k = 0; k < m; ++k) {
      candidate[k] = rest % l;
      rest /= l;
    }
    if (rest != 0) break;
    if (poly::is_irreducible(f, candidate)) return candidate;
  }
  throw std::logic_error("find_irreducible: exhausted candidates");
}

ExtField::ExtField(u64 l, unsigned m) : ExtField(l, find_irreducible(l, m)) {}

ExtField::ExtField(u64 l, Poly modulus) : base_(l), m_(0), modulus_(std::move(modulus)) {
  poly::trim(modulus_);
  const long d = poly::degree(modulus_);
  if (d < 1 || modulus_.back() != 1) throw std::invalid_argument("ExtField: modulus must be monic of degree >= 1");
  m_ = static_cast<unsigned>(d);
}

ExtElement ExtField::zero() const { return ExtElement{std::vector<u64>(m_, 0)}; }

ExtElement ExtField::one() const { return scalar(1); }

ExtElement ExtField::scalar(u64 c) const {
  ExtElement out = zero();
  out.coeffs[0] = c % base_.order();
  return out;
}

ExtElement ExtField::from_index(u64 index) const {
  ExtElement out = zero();
  for (unsigned k = 0; k < m_ && index > 0; ++k) {
    out.coeffs[k] = index % base_.order();
    index /= base_.order();
  }
  return out;
}

ExtElement ExtField::add(const ExtElement& a, const ExtElement& b) const {
  ExtElement out = a;
  for (unsigned k = 0; k < m_; ++k) out.coeffs[k] = base_.add(a.coeffs[k], b.coeffs[k]);
  return out;
}

ExtElement ExtField::sub(const ExtElement& a, const ExtElement& b) const {
  ExtElement out = a;
  for (unsigned k = 0; k < m_; ++k) out.coeffs[k] = base_.sub(a.coeffs[k], b.coeffs[k]);
  return out;
}

ExtElement ExtField::neg(const ExtElement& a) const { return sub(zero(), a); }

ExtElement ExtField::scale(const ExtElement& a, u64 c) const {
  ExtElement out = a;
  for (auto& v : out.coeffs) v = base_.mul(v, c);
  return out;
}

void ExtField::add_scaled(ExtElement& a, const ExtElement& b, u64 c) const {
  if (c == 0) return;
  for (unsigned k = 0; k < m_; ++k) a.coeffs[k] = base_.add(a.coeffs[k], base_.mul(b.coeffs[k], c));
}

ExtElement ExtField::mul(const ExtElement& a, const ExtElement& b) const {
  std::vector<u64> prod(2 * m_ - 1, 0);
  for (unsigned i = 0; i < m_; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (unsigned j = 0; j < m_; ++j) {
      prod[i + j] = base_.add(prod[i + j], base_.mul(a.coeffs[i], b.coeffs[j]));
    }
  }
  // Reduce by the monic modulus from the top down.
  for (std::size_t i = prod.size(); i-- > m_;) {
    const u64 c = prod[i];
    if (c == 0) continue;
    for (unsigned k = 0; k < m_; ++k) {
      auto& slot = prod[i - m_ + k];
      slot = base_.sub(slot, base_.mul(c, modulus_[k]));
    }
    prod[i] = 0;
  }
  prod.resize(m_);
  return ExtElement{std::move(prod)};
}

ExtElement ExtField::pow(const ExtElement& a, u64 e) const { return pow(a, BigInt(e)); }

ExtElement ExtField::pow(const ExtElement& a, const BigInt& e) const {
  ExtElement result = one();
  if (e == 0) return result;
  const auto bits = static_cast<unsigned>(boost::multiprecision::msb(e)) + 1;
  for (unsigned i = bits; i > 0; --i) {
    result = mul(result, result);
    if (boost::multiprecision::bit_test(e, i - 1)) result = mul(result, a);
  }
  return result;
}

bool ExtField::is_zero(const ExtElement& a) const {
  for (u64 c : a.coeffs) {
    if (c != 0) return false;
  }
  return true;
}

bool ExtField::is_scalar(const ExtElement& a) const {
  for (unsigned k = 1; k < m_; ++k) {
    if (a.coeffs[k] != 0) return false;
  }
  return true;
}

u64 ExtField::scalar_value(const ExtElement& a) const {
  if (!is_scalar(a)) throw VerificationError("extension element is not in the prime field");
  return a.coeffs[0];
}

ExtElement primitive_nth_root(const Parameters& params, const ExtField& ext, unsigned alpha_index) {
  const u64 n = params.n;
  if (alpha_index >= params.phi_n()) {
    throw std::out_of_range("primitive_nth_root: only " + std::to_string(params.phi_n()) +
                            " primitive n-th roots exist");
  }
  BigInt group_order = 1;
  for (unsigned k = 0; k < ext.degree(); ++k) group_order *= ext.characteristic();
  group_order -= 1;
  if (group_order % n != 0) throw std::invalid_argument("primitive_nth_root: n does not divide l^m - 1");
  const BigInt exponent = group_order / n;

  std::set<ExtElement> accepted;
  const ExtElement one = ext.one();
  for (u64 index = 1;; ++index) {
    const ExtElement alpha = ext.pow(ext.from_index(index), exponent);
    if (ext.pow(alpha, n / params.p) == one || ext.pow(alpha, n / params.q) == one) continue;
    if (ext.pow(alpha, n) != one) throw VerificationError("primitive_nth_root: alpha^n != 1");
    if (!accepted.insert(alpha).second) continue;
    if (accepted.size() == alpha_index + 1) return alpha;
  }
}

GaussData gauss_data(const Parameters& params, const ExtField& ext, const ExtElement& alpha) {
  const PrimeField& f = ext.base();
  GaussData out;
  out.alpha = alpha;
  out.beta = ext.pow(alpha, params.pow_p(params.s - 1) * params.pow_q(params.t));

  ExtElement r = ext.zero(), nr = ext.zero();
  ExtElement power = ext.one();
  for (u64 x = 1; x < params.p; ++x) {
    power = ext.mul(power, out.beta);
    if (legendre(x, params.p) == 1) {
      r = ext.add(r, power);
    } else {
      nr = ext.add(nr, power);
    }
  }
  if (!ext.is_scalar(r) || !ext.is_scalar(nr)) {
    throw VerificationError("gauss_data: Gauss sums are not in the prime field");
  }
  out.residue_sum = ext.scalar_value(r);
  out.nonresidue_sum = ext.scalar_value(nr);

  if (f.add(out.residue_sum, out.nonresidue_sum) != f.neg(1)) {
    throw VerificationError("gauss_data: R + N != -1");
  }
  if (f.mul(out.residue_sum, out.nonresidue_sum) != (params.p + 1) / 4 % params.l) {
    throw VerificationError("gauss_data: RN != (p+1)/4");
  }
  if (params.l == 2) {
    if (params.p % 8 != 7) throw VerificationError("gauss_data: l = 2 requires p = -1 mod 8");
    out.delta = 1;
  } else {
    out.delta = f.add(f.mul(2, out.residue_sum), 1);
    if (f.mul(out.delta, out.delta) != f.neg(params.p % params.l)) {
      throw VerificationError("gauss_data: delta^2 != -p");
    }
  }
  return out;
}

SplittingField build_splitting_field(const Parameters& params, unsigned alpha_index) {
  const auto m = static_cast<unsigned>(mult_order(params.l, params.n));
  ExtField field(params.l, m);
  ExtElement alpha = primitive_nth_root(params, field, alpha_index);
  GaussData gauss = gauss_data(params, field, alpha);
  std::vector<ExtElement> powers;
  powers.reserve(params.n);
  powers.push_back(field.one());
  for (u64 e = 1; e < params.n; ++e) powers.push_back(field.mul(powers.back(), alpha));
  return SplittingField{std::move(field), std::move(gauss), std::move(powers)};
}

}  // namespace mcc::gf
