#pragma once

#include <string>
#include <vector>

#include "mcc/gf.hpp"
#include "mcc/ring.hpp"

namespace mcc {

struct MinimalPolynomial {
  CosetLabel label;
  gf::Poly poly;  // monic, ascending coefficients over F_l
};

/// prod_{e in C} (x - alpha^e), multiplied out in the splitting field and
/// projected to F_l. Throws gf::VerificationError when a coefficient is not
/// in the prime field.
MinimalPolynomial minimal_polynomial(const CosetSystem& system, const gf::SplittingField& field,
                                     const CosetLabel& label);

struct Idempotent {
  CosetLabel label;
  RingElement poly;
};

/// eps_u = (1/n) sum_{e in C} alpha^{-ue}, evaluated for every u.
Idempotent idempotent_oracle(const CosetSystem& system, const gf::SplittingField& field, const CosetLabel& label);

/// sum_{e in C} alpha^{ue} evaluated term by term.
gf::ExtElement chi_eval_direct(const CosetSystem& system, const gf::SplittingField& field, const CosetLabel& label,
                               u64 u);

/// chi_label(alpha^u) from the divisibility class of u: a Gauss-sum factor
/// for the p-part times a Ramanujan sum for the q-part.
u64 chi_eval(const Parameters& params, const gf::GaussData& gauss, const CosetLabel& label, u64 u);

/// (-1 + sign * delta) / 2 for odd l. For l = 2 the residue sum stands in for
/// sign = +1 and the non-residue sum for sign = -1.
u64 gauss_factor(const Parameters& params, const gf::GaussData& gauss, int sign);

/// Coefficient of each chi in a closed-form idempotent.
struct ChiCoefficient {
  CosetLabel label;
  u64 coeff;  // in F_l
};

/// The closed-form chi-combination for theta_label.
std::vector<ChiCoefficient> idempotent_closed_form_terms(const Parameters& params, const gf::GaussData& gauss,
                                                         const CosetLabel& label);

/// Which case of the closed form covers this label: "theta_0t", "theta_0j",
/// "theta_ij", "theta_it", "theta_sj" or "theta_st".
std::string closed_form_case(const Parameters& params, const CosetLabel& label);

Idempotent idempotent_closed_form(const CosetSystem& system, const gf::GaussData& gauss, const CosetLabel& label);

/// Reads off the coefficient of each chi. Throws std::logic_error when the
/// polynomial is not constant on some coset.
std::vector<ChiCoefficient> chi_combination(const CosetSystem& system, const RingElement& poly);

struct IdempotentReport {
  bool idempotent = false;  // e^2 = e
  bool spectrum = false;    // e(alpha^u) = [u in C] for every u
  std::vector<u64> spectrum_failures;
  bool ok() const { return idempotent && spectrum; }
};

IdempotentReport verify_idempotent(const CosetSystem& system, const gf::SplittingField& field, const Idempotent& e);

struct FamilyReport {
  bool sums_to_one = false;
  std::vector<std::pair<CosetLabel, CosetLabel>> non_orthogonal;
  bool ok() const { return sums_to_one && non_orthogonal.empty(); }
};

/// Sum equals 1 and pairwise products vanish. family must hold one idempotent
/// per label.
FamilyReport verify_family(const std::vector<Idempotent>& family);

}  // namespace mcc
