#include "mcc/idempotents.hpp"

#include <stdexcept>

namespace mcc {

namespace {

unsigned valuation(u64 e, u64 prime, unsigned cap) {
  if (e == 0) return cap;
  unsigned v = 0;
  while (v < cap && e % prime == 0) {
    e /= prime;
    ++v;
  }
  return v;
}

int residue_class(const Parameters& params) { return params.qr_case ? 1 : -1; }

int power_sign(int base, unsigned e) { return (base == -1 && e % 2 == 1) ? -1 : 1; }

}  // namespace

MinimalPolynomial minimal_polynomial(const CosetSystem& system, const gf::SplittingField& field,
                                     const CosetLabel& label) {
  const auto& ext = field.field;
  std::vector<gf::ExtElement> coeffs{ext.one()};
  for (u64 e : system.coset(label).elements) {
    const gf::ExtElement root = field.alpha_pow(e);
    std::vector<gf::ExtElement> next(coeffs.size() + 1, ext.zero());
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      next[k + 1] = ext.add(next[k + 1], coeffs[k]);
      next[k] = ext.sub(next[k], ext.mul(root, coeffs[k]));
    }
    coeffs = std::move(next);
  }
  MinimalPolynomial out{label, {}};
  for (const auto& c : coeffs) {
    if (!ext.is_scalar(c)) {
      throw gf::VerificationError("minimal polynomial of " + to_string(label) + " has a coefficient outside F_l");
    }
    out.poly.push_back(ext.scalar_value(c));
  }
  return out;
}

Idempotent idempotent_oracle(const CosetSystem& system, const gf::SplittingField& field, const CosetLabel& label) {
  const Parameters& params = system.params();
  const auto& ext = field.field;
  const auto& f = ext.base();
  const u64 n = params.n;
  const u64 n_inv = f.inv(n % params.l);
  const auto& elements = system.coset(label).elements;
  std::vector<u64> coeffs(n, 0);
  for (u64 u = 0; u < n; ++u) {
    gf::ExtElement sum = ext.zero();
    for (u64 e : elements) sum = ext.add(sum, field.alpha_pow(n - mulmod(u, e, n)));
    if (!ext.is_scalar(sum)) {
      throw gf::VerificationError("idempotent coefficient " + std::to_string(u) + " of " + to_string(label) +
                                  " is outside F_l");
    }
    coeffs[u] = f.mul(ext.scalar_value(sum), n_inv);
  }
  return {label, RingElement(n, params.l, std::move(coeffs))};
}

gf::ExtElement chi_eval_direct(const CosetSystem& system, const gf::SplittingField& field, const CosetLabel& label,
                               u64 u) {
  const u64 n = system.params().n;
  const auto& ext = field.field;
  gf::ExtElement sum = ext.zero();
  for (u64 e : system.coset(label).elements) sum = ext.add(sum, field.alpha_pow(mulmod(u % n, e, n)));
  return sum;
}

u64 gauss_factor(const Parameters& params, const gf::GaussData& gauss, int sign) {
  const gf::PrimeField f(params.l);
  if (params.l == 2) return sign > 0 ? gauss.residue_sum : gauss.nonresidue_sum;
  const u64 d = sign > 0 ? gauss.delta : f.neg(gauss.delta);
  return f.mul(f.add(f.neg(1), d), f.inv(2));
}

u64 chi_eval(const Parameters& params, const gf::GaussData& gauss, const CosetLabel& label, u64 u) {
  if (!is_valid_label(params, label)) throw std::out_of_range("invalid coset label " + to_string(label));
  const gf::PrimeField f(params.l);
  u %= params.n;

  // Ramanujan sum over Z*_{q^{t-j}}.
  i64 q_part = 1;
  if (label.j < params.t) {
    const unsigned d = params.t - label.j;
    const unsigned v = valuation(u, params.q, params.t);
    if (v >= d) {
      q_part = static_cast<i64>(params.phi_q(d));
    } else if (v == d - 1) {
      q_part = -static_cast<i64>(params.pow_q(d - 1));
    } else {
      return 0;
    }
  }
  if (label.i == params.s) return f.from_int(q_part);

  // Gauss-type sum over R_{s-i} or N_{s-i}.
  const unsigned d = params.s - label.i;
  const unsigned v = valuation(u, params.p, params.s);
  const u64 scale = params.pow_p(d - 1) % params.l;
  u64 p_part;
  if (v >= d) {
    p_part = f.mul(scale, (params.p - 1) / 2 % params.l);
  } else if (v == d - 1) {
    const u64 w = u / params.pow_p(d - 1) % params.p;
    const int set_class = power_sign(residue_class(params), label.j + params.t) * (label.starred ? -1 : 1);
    const int sign = legendre(w, params.p) * set_class;
    p_part = f.mul(scale, sign > 0 ? gauss.residue_sum : gauss.nonresidue_sum);
  } else {
    return 0;
  }
  return f.mul(p_part, f.from_int(q_part));
}

std::string closed_form_case(const Parameters& params, const CosetLabel& label) {
  if (!is_valid_label(params, label)) throw std::out_of_range("invalid coset label " + to_string(label));
  const bool top_j = label.j == params.t;
  if (label.i == params.s) return top_j ? "theta_st" : "theta_sj";
  if (label.i == 0) return top_j ? "theta_0t" : "theta_0j";
  return top_j ? "theta_it" : "theta_ij";
}

std::vector<ChiCoefficient> idempotent_closed_form_terms(const Parameters& params, const gf::GaussData& gauss,
                                                         const CosetLabel& label) {
  if (!is_valid_label(params, label)) throw std::out_of_range("invalid coset label " + to_string(label));
  const gf::PrimeField f(params.l);
  const unsigned s = params.s, t = params.t, i = label.i, j = label.j;
  std::vector<u64> coeff(all_labels(params).size(), 0);
  auto add = [&](const CosetLabel& target, u64 c) {
    auto& slot = coeff[label_index(params, target)];
    slot = f.add(slot, c);
  };

  // q-side weight of chi_{k,m}: q - 1 for m >= t - j, -1 for m = t - j - 1.
  auto q_weight = [&](unsigned m) -> i64 {
    if (j == t) return 1;
    if (m >= t - j) return static_cast<i64>(params.q) - 1;
    if (m + 1 == t - j) return -1;
    return 0;
  };
  const unsigned q_exp = j == t ? t : j + 1;

  if (i == s) {
    const u64 scale = f.inv(f.mul(params.pow_p(s) % params.l, params.pow_q(q_exp) % params.l));
    for (unsigned k = 0; k <= s; ++k) {
      for (unsigned m = 0; m <= t; ++m) {
        const u64 c = f.mul(scale, f.from_int(q_weight(m)));
        add({k, m, false}, c);
        if (k < s) add({k, m, true}, c);
      }
    }
  } else {
    const u64 scale = f.inv(f.mul(params.pow_p(i + 1) % params.l, params.pow_q(q_exp) % params.l));
    const u64 half = (params.p - 1) / 2 % params.l;
    for (unsigned k = s - i; k <= s; ++k) {
      for (unsigned m = 0; m <= t; ++m) {
        const u64 c = f.mul(scale, f.mul(half, f.from_int(q_weight(m))));
        add({k, m, false}, c);
        if (k < s) add({k, m, true}, c);
      }
    }
    // Level s - i - 1 carries the Gauss sums. The unstarred theta pairs the
    // unstarred chi with N when q^{m+j+t} is a residue; starring either side
    // swaps N and R.
    const unsigned k = s - i - 1;
    for (unsigned m = 0; m <= t; ++m) {
      const i64 w = q_weight(m);
      if (w == 0) continue;
      for (bool starred : {false, true}) {
        const int e = power_sign(residue_class(params), m + j + t) * (label.starred ? -1 : 1) * (starred ? -1 : 1);
        const u64 g = gauss_factor(params, gauss, -e);
        add({k, m, starred}, f.mul(scale, f.mul(g, f.from_int(w))));
      }
    }
  }

  std::vector<ChiCoefficient> out;
  for (const auto& target : all_labels(params)) {
    const u64 c = coeff[label_index(params, target)];
    if (c != 0) out.push_back({target, c});
  }
  return out;
}

Idempotent idempotent_closed_form(const CosetSystem& system, const gf::GaussData& gauss, const CosetLabel& label) {
  const Parameters& params = system.params();
  RingElement poly(params.n, params.l);
  for (const auto& term : idempotent_closed_form_terms(params, gauss, label)) {
    for (u64 e : system.coset(term.label).elements) {
      poly.add_scaled(RingElement::monomial(params.n, params.l, e), term.coeff);
    }
  }
  return {label, std::move(poly)};
}

std::vector<ChiCoefficient> chi_combination(const CosetSystem& system, const RingElement& poly) {
  std::vector<ChiCoefficient> out;
  for (const auto& coset : system.cosets()) {
    const u64 c = poly[coset.elements.front()];
    for (u64 e : coset.elements) {
      if (poly[e] != c) {
        throw std::logic_error("polynomial is not constant on " + to_string(coset.label) + " (exponents " +
                               std::to_string(coset.elements.front()) + " and " + std::to_string(e) + ")");
      }
    }
    if (c != 0) out.push_back({coset.label, c});
  }
  return out;
}

IdempotentReport verify_idempotent(const CosetSystem& system, const gf::SplittingField& field, const Idempotent& e) {
  const u64 n = system.params().n;
  const auto& ext = field.field;
  IdempotentReport report;
  report.idempotent = ring_mul(e.poly, e.poly) == e.poly;
  const Coset& coset = system.coset(e.label);
  for (u64 u = 0; u < n; ++u) {
    gf::ExtElement value = ext.zero();
    for (u64 k = 0; k < n; ++k) {
      if (e.poly[k] != 0) ext.add_scaled(value, field.alpha_pow(mulmod(u, k, n)), e.poly[k]);
    }
    const gf::ExtElement expected = coset.contains(u) ? ext.one() : ext.zero();
    if (value != expected) report.spectrum_failures.push_back(u);
  }
  report.spectrum = report.spectrum_failures.empty();
  return report;
}

FamilyReport verify_family(const std::vector<Idempotent>& family) {
  FamilyReport report;
  if (family.empty()) return report;
  const u64 n = family.front().poly.length(), l = family.front().poly.characteristic();
  RingElement sum(n, l);
  for (const auto& e : family) sum += e.poly;
  report.sums_to_one = sum == RingElement::one(n, l);
  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = a + 1; b < family.size(); ++b) {
      if (!ring_mul(family[a].poly, family[b].poly).is_zero()) {
        report.non_orthogonal.emplace_back(family[a].label, family[b].label);
      }
    }
  }
  return report;
}

}  // namespace mcc
