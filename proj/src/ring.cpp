#include "mcc/ring.hpp"

namespace mcc {

RingElement::RingElement(u64 n, u64 l) : field_(l), coeffs_(n, 0) {
  if (n == 0) throw std::invalid_argument("ring length must be positive");
}

RingElement::RingElement(u64 n, u64 l, std::vector<u64> coeffs) : field_(l), coeffs_(std::move(coeffs)) {
  if (n == 0) throw std::invalid_argument("ring length must be positive");
  if (coeffs_.size() != n) {
    throw std::invalid_argument("expected " + std::to_string(n) + " coefficients, got " +
                                std::to_string(coeffs_.size()));
  }
  for (auto& c : coeffs_) c %= l;
}

RingElement RingElement::one(u64 n, u64 l) { return monomial(n, l, 0, 1); }

RingElement RingElement::monomial(u64 n, u64 l, u64 exponent, u64 coeff) {
  RingElement out(n, l);
  out.coeffs_[exponent % n] = coeff % l;
  return out;
}

bool RingElement::is_zero() const {
  for (u64 c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

std::size_t RingElement::weight() const {
  std::size_t w = 0;
  for (u64 c : coeffs_) w += c != 0;
  return w;
}

void RingElement::check_compatible(const RingElement& other) const {
  if (length() != other.length() || characteristic() != other.characteristic()) {
    throw RingMismatch("ring elements differ: (n=" + std::to_string(length()) + ", l=" +
                       std::to_string(characteristic()) + ") vs (n=" + std::to_string(other.length()) +
                       ", l=" + std::to_string(other.characteristic()) + ")");
  }
}

RingElement& RingElement::operator+=(const RingElement& other) {
  check_compatible(other);
  for (std::size_t e = 0; e < coeffs_.size(); ++e) coeffs_[e] = field_.add(coeffs_[e], other.coeffs_[e]);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
  check_compatible(other);
  for (std::size_t e = 0; e < coeffs_.size(); ++e) coeffs_[e] = field_.sub(coeffs_[e], other.coeffs_[e]);
  return *this;
}

void RingElement::add_scaled(const RingElement& other, u64 c) {
  check_compatible(other);
  c %= characteristic();
  if (c == 0) return;
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    if (other.coeffs_[e] != 0) coeffs_[e] = field_.add(coeffs_[e], field_.mul(c, other.coeffs_[e]));
  }
}

RingElement RingElement::scaled(u64 c) const {
  RingElement out(length(), characteristic());
  out.add_scaled(*this, c);
  return out;
}

RingElement ring_mul(const RingElement& a, const RingElement& b) {
  if (a.length() != b.length() || a.characteristic() != b.characteristic()) {
    throw RingMismatch("cannot multiply elements of different rings");
  }
  const u64 n = a.length();
  const auto& f = a.field();
  std::vector<u64> support;
  for (u64 v = 0; v < n; ++v) {
    if (b[v] != 0) support.push_back(v);
  }
  std::vector<u64> c(n, 0);
  for (u64 u = 0; u < n; ++u) {
    const u64 au = a[u];
    if (au == 0) continue;
    for (u64 v : support) {
      u64 k = u + v;
      if (k >= n) k -= n;
      c[k] = f.add(c[k], f.mul(au, b[v]));
    }
  }
  return RingElement(n, a.characteristic(), std::move(c));
}

RingElement ring_pow(RingElement base, u64 e) {
  RingElement out = RingElement::one(base.length(), base.characteristic());
  while (e > 0) {
    if (e & 1) out = ring_mul(out, base);
    e >>= 1;
    if (e > 0) base = ring_mul(base, base);
  }
  return out;
}

RingElement substitute_power(const RingElement& a, u64 k) {
  const u64 n = a.length();
  std::vector<u64> c(n, 0);
  for (u64 e = 0; e < n; ++e) {
    if (a[e] == 0) continue;
    const u64 target = mulmod(e, k, n);
    c[target] = a.field().add(c[target], a[e]);
  }
  return RingElement(n, a.characteristic(), std::move(c));
}

RingElement chi(const CosetSystem& system, const CosetLabel& label) {
  const Parameters& params = system.params();
  std::vector<u64> c(params.n, 0);
  for (u64 e : system.coset(label).elements) c[e] = 1;
  return RingElement(params.n, params.l, std::move(c));
}

ChiTable::ChiTable(const CosetSystem& system) : params_(system.params()) {
  for (const auto& label : all_labels(params_)) chis_.push_back(chi(system, label));
}

}  // namespace mcc
