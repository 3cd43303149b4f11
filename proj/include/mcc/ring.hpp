#pragma once

#include <string>
#include <vector>

#include "mcc/cosets.hpp"
#include "mcc/gf.hpp"

namespace mcc {

class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Element of F_l[x]/(x^n - 1) as a dense coefficient vector; entry e is the
/// coefficient of x^e.
class RingElement {
 public:
  /// The zero element.
  RingElement(u64 n, u64 l);
  /// Coefficients are reduced mod l; throws std::invalid_argument unless
  /// coeffs.size() == n.
  RingElement(u64 n, u64 l, std::vector<u64> coeffs);

  static RingElement one(u64 n, u64 l);
  static RingElement monomial(u64 n, u64 l, u64 exponent, u64 coeff = 1);

  u64 length() const { return coeffs_.size(); }
  u64 characteristic() const { return field_.order(); }
  const gf::PrimeField& field() const { return field_; }
  const std::vector<u64>& coeffs() const { return coeffs_; }
  u64 operator[](u64 e) const { return coeffs_[e]; }

  bool is_zero() const;
  std::size_t weight() const;

  RingElement& operator+=(const RingElement& other);
  RingElement& operator-=(const RingElement& other);
  /// this += c * other
  void add_scaled(const RingElement& other, u64 c);
  RingElement scaled(u64 c) const;

  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  bool operator==(const RingElement& other) const = default;

 private:
  void check_compatible(const RingElement& other) const;

  gf::PrimeField field_;
  std::vector<u64> coeffs_;
};

/// Cyclic convolution. Throws RingMismatch when n or l differ.
RingElement ring_mul(const RingElement& a, const RingElement& b);
inline RingElement operator*(const RingElement& a, const RingElement& b) { return ring_mul(a, b); }
RingElement ring_pow(RingElement base, u64 e);

/// a(x^k) mod x^n - 1.
RingElement substitute_power(const RingElement& a, u64 k);

/// Indicator polynomial of the coset with this label.
RingElement chi(const CosetSystem& system, const CosetLabel& label);

/// chi for every label, stored in all_labels order.
class ChiTable {
 public:
  explicit ChiTable(const CosetSystem& system);

  const Parameters& params() const { return params_; }
  const RingElement& operator[](const CosetLabel& label) const { return chis_[label_index(params_, label)]; }

 private:
  Parameters params_;
  std::vector<RingElement> chis_;
};

}  // namespace mcc
