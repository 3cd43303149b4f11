#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mcc/count_table.hpp"
#include "mcc/ring.hpp"

namespace mcc {

struct ChiProduct {
  CosetLabel left;
  CosetLabel right;
};

/// coeff * chi_label, with coeff an integer that is reduced mod l on use.
struct ChiTerm {
  u64 coeff;
  CosetLabel label;
};

/// One branch of the product identities. The right-hand side is either a
/// chi-combination or, for the product-equals-product statements, another
/// product.
struct IdentityRule {
  std::string id;
  Residuosity when = Residuosity::any;
  unsigned uses = 0;
  std::function<bool(const Parameters&, const CountIndices&)> in_range;
  std::function<ChiProduct(const Parameters&, const CountIndices&)> lhs;
  std::function<std::vector<ChiTerm>(const Parameters&, const CountIndices&)> rhs;
  std::function<ChiProduct(const Parameters&, const CountIndices&)> rhs_product;
  std::string note;  // set when the rule departs from the usual printed form
};

const std::vector<IdentityRule>& identity_rules();

/// Throws std::out_of_range for an unknown id.
const IdentityRule& find_identity_rule(std::string_view id);

struct IdentityCase {
  const IdentityRule* rule;
  CountIndices idx;
};

std::vector<IdentityCase> enumerate_identity_cases(const Parameters& params);

struct IdentityCheck {
  bool ok = false;
  RingElement lhs;
  RingElement rhs;
  RingElement residual;  // lhs - rhs
};

/// Evaluates both sides over F_l. Throws std::out_of_range when the rule does
/// not apply or the indices are outside its range.
IdentityCheck verify_identity(const ChiTable& chis, const IdentityRule& rule, const CountIndices& idx);

/// Integer form of a chi-combination rule: the coefficient of x^y in the
/// product, computed over Z by counting pairs, must equal the integer
/// coefficient the rule assigns to the coset of y. Returns the first offending
/// exponent, or nullopt when the identity holds over Z.
std::optional<u64> integer_identity_violation(const CosetSystem& system, const IdentityRule& rule,
                                              const CountIndices& idx);

struct IdentityMismatch {
  std::string rule;
  std::string indices;
  std::size_t residual_weight = 0;
  bool over_integers = false;
};

struct IdentitySweepReport {
  std::size_t cases = 0;
  std::vector<IdentityMismatch> mismatches;        // over F_l
  std::vector<IdentityMismatch> integer_failures;  // informational
  bool ok() const { return mismatches.empty(); }
};

IdentitySweepReport sweep_identities(const CosetSystem& system, bool integer_check = true);

}  // namespace mcc
