#include "mcc/identity_table.hpp"

#include <stdexcept>

#include "rule_support.hpp"

namespace mcc {

namespace {

using namespace rules;
namespace b = index_bits;

constexpr Residuosity any = Residuosity::any, qr = Residuosity::qr, qnr = Residuosity::qnr;

CosetLabel T(unsigned i, unsigned j, bool starred) { return {i, j, starred}; }
std::string name(bool starred) { return starred ? "chi*" : "chi"; }

using Terms = std::vector<ChiTerm>;

// sum over j < m <= t of c * chi_{im} of the given type, flipped on odd gaps.
void add_level_sum(const P& p, Terms& out, u64 c, unsigned i, unsigned j, bool starred) {
  for (unsigned m = j + 1; m <= p.t; ++m) out.push_back({c, flip(p, T(i, m, starred), odd(m, j))});
}

// c * (sum over i < k <= s-1 of (chi_kj + chi*_kj) + chi_sj)
void add_column_tail(const P& p, Terms& out, u64 c, unsigned i, unsigned j) {
  for (unsigned k = i + 1; k < p.s; ++k) {
    out.push_back({c, L(k, j)});
    out.push_back({c, S(k, j)});
  }
  out.push_back({c, L(p.s, j)});
}

std::vector<IdentityRule> build_rules() {
  std::vector<IdentityRule> r;
  const unsigned IJ = b::i | b::j, II2JJ2 = b::i | b::i2 | b::j | b::j2, IJJ2 = b::i | b::j | b::j2,
                 II2J = b::i | b::i2 | b::j;

  // Squares below the top p-level.
  for (bool st : {false, true}) {
    for (Residuosity w : {qr, qnr}) {
      r.push_back({name(st) + "_ij^2" + (w == qr ? ":qr" : ":qnr"), w, IJ, r_ij,
                   [st](const P&, const X& x) { return ChiProduct{T(x.i, x.j, st), T(x.i, x.j, st)}; },
                   [st](const P& p, const X& x) {
                     Terms out{{small(p, x.i) * q0(p, x.j), T(x.i, x.j, st)},
                               {large(p, x.i) * q0(p, x.j), T(x.i, x.j, !st)}};
                     add_level_sum(p, out, small(p, x.i) * fq(p, x.j), x.i, x.j, st);
                     add_level_sum(p, out, large(p, x.i) * fq(p, x.j), x.i, x.j, !st);
                     return out;
                   },
                   nullptr, ""});
    }
  }

  r.push_back({"chi_ij*chi*_ij", any, IJ, r_ij,
               [](const P&, const X& x) { return ChiProduct{L(x.i, x.j), S(x.i, x.j)}; },
               [](const P& p, const X& x) {
                 const u64 a = small(p, x.i), f = fp(p, x.i), z = q0(p, x.j), y = fq(p, x.j);
                 Terms out{{a * z, L(x.i, x.j)}, {a * z, S(x.i, x.j)}};
                 for (unsigned m = x.j + 1; m <= p.t; ++m) {
                   out.push_back({a * y, L(x.i, m)});
                   out.push_back({a * y, S(x.i, m)});
                 }
                 for (unsigned k = x.i + 1; k < p.s; ++k) {
                   for (unsigned m = x.j + 1; m <= p.t; ++m) {
                     out.push_back({f * y, L(k, m)});
                     out.push_back({f * y, S(k, m)});
                   }
                 }
                 out.push_back({f * z, L(p.s, x.j)});
                 for (unsigned m = x.j + 1; m <= p.t; ++m) out.push_back({f * y, L(p.s, m)});
                 for (unsigned k = x.i + 1; k < p.s; ++k) {
                   out.push_back({f * z, L(k, x.j)});
                   out.push_back({f * z, S(k, x.j)});
                 }
                 return out;
               },
               nullptr, "coefficient of the chi_sm sum taken as phi(p^(s-i))/2 phi(q^(t-j))"});

  r.push_back({"chi_sj^2", any, b::j, r_sj,
               [](const P& p, const X& x) { return ChiProduct{L(p.s, x.j), L(p.s, x.j)}; },
               [](const P& p, const X& x) {
                 Terms out{{q0(p, x.j), L(p.s, x.j)}};
                 for (unsigned m = x.j + 1; m <= p.t; ++m) out.push_back({fq(p, x.j), L(p.s, m)});
                 return out;
               },
               nullptr, ""});

  // j = t.
  for (bool st : {false, true}) {
    r.push_back({name(st) + "_it^2", any, b::i, r_i,
                 [st](const P& p, const X& x) { return ChiProduct{T(x.i, p.t, st), T(x.i, p.t, st)}; },
                 [st](const P& p, const X& x) {
                   return Terms{{small(p, x.i), T(x.i, p.t, st)}, {large(p, x.i), T(x.i, p.t, !st)}};
                 },
                 nullptr, ""});
  }
  r.push_back({"chi_it*chi*_it", any, b::i, r_i,
               [](const P& p, const X& x) { return ChiProduct{L(x.i, p.t), S(x.i, p.t)}; },
               [](const P& p, const X& x) {
                 const u64 a = small(p, x.i), f = fp(p, x.i);
                 Terms out{{a, L(x.i, p.t)}, {a, S(x.i, p.t)}};
                 for (unsigned k = x.i + 1; k < p.s; ++k) {
                   out.push_back({f, L(k, p.t)});
                   out.push_back({f, S(k, p.t)});
                 }
                 out.push_back({f, L(p.s, p.t)});
                 return out;
               },
               nullptr, ""});

  // i < i'.
  for (bool sa : {false, true}) {
    for (bool sb : {false, true}) {
      const std::string stem = name(sa) + "_ij*" + name(sb) + "_i'j'";
      r.push_back({stem + ":j<j'", any, II2JJ2, r_ii2jj2,
                   [sa, sb](const P&, const X& x) { return ChiProduct{T(x.i, x.j, sa), T(x.i2, x.j2, sb)}; },
                   [sa](const P& p, const X& x) {
                     return Terms{{fp(p, x.i2) * fq(p, x.j2), T(x.i, x.j, sa)}};
                   },
                   nullptr, ""});
      r.push_back({stem + ":j'<j", any, II2JJ2, r_ii2j2j,
                   [sa, sb](const P&, const X& x) { return ChiProduct{T(x.i, x.j, sa), T(x.i2, x.j2, sb)}; },
                   [sa](const P& p, const X& x) {
                     return Terms{{fp(p, x.i2) * fq(p, x.j), flip(p, T(x.i, x.j2, sa), odd(x.j, x.j2))}};
                   },
                   nullptr, "result changes type on an odd q-gap when q is a non-residue"});
    }
  }

  // Same i, j < j'.
  struct Branch {
    const char* suffix;
    Residuosity when;
    bool (*range)(const P&, const X&);
    bool odd_gap;
  };
  const Branch branches[] = {{":qr", qr, r_ijj2, false},
                             {":qnr:even", qnr, r_ijj2_even, false},
                             {":qnr:odd", qnr, r_ijj2_odd, true}};
  for (bool sa : {false, true}) {
    for (bool sb : {false, true}) {
      for (const auto& br : branches) {
        // The factors behave as the same type exactly when their types agree
        // after accounting for the parity flip.
        const bool same = (sa == sb) != br.odd_gap;
        r.push_back({name(sa) + "_ij*" + name(sb) + "_ij'" + br.suffix, br.when, IJJ2, br.range,
                     [sa, sb](const P&, const X& x) { return ChiProduct{T(x.i, x.j, sa), T(x.i, x.j2, sb)}; },
                     [sa, same](const P& p, const X& x) {
                       const u64 y = fq(p, x.j2);
                       if (same) {
                         return Terms{{small(p, x.i) * y, T(x.i, x.j, sa)}, {large(p, x.i) * y, T(x.i, x.j, !sa)}};
                       }
                       Terms out{{small(p, x.i) * y, L(x.i, x.j)}, {small(p, x.i) * y, S(x.i, x.j)}};
                       add_column_tail(p, out, fp(p, x.i) * y, x.i, x.j);
                       return out;
                     },
                     nullptr, ""});
      }
    }
  }

  // Products with chi_sj'.
  r.push_back({"chi_sj*chi_sj'", any, b::j | b::j2, r_sjj2,
               [](const P& p, const X& x) { return ChiProduct{L(p.s, x.j), L(p.s, x.j2)}; },
               [](const P& p, const X& x) { return Terms{{fq(p, x.j2), L(p.s, x.j)}}; }, nullptr, ""});
  for (bool sa : {false, true}) {
    r.push_back({name(sa) + "_ij*chi_sj':j<j'", any, IJJ2, r_ijj2,
                 [sa](const P& p, const X& x) { return ChiProduct{T(x.i, x.j, sa), L(p.s, x.j2)}; },
                 [sa](const P& p, const X& x) { return Terms{{fq(p, x.j2), T(x.i, x.j, sa)}}; }, nullptr, ""});
    r.push_back({name(sa) + "_ij*chi_sj':j'<j", any, IJJ2, r_ij2j,
                 [sa](const P& p, const X& x) { return ChiProduct{T(x.i, x.j, sa), L(p.s, x.j2)}; },
                 [sa](const P& p, const X& x) {
                   return Terms{{fq(p, x.j), flip(p, T(x.i, x.j2, sa), odd(x.j, x.j2))}};
                 },
                 nullptr, "result changes type on an odd q-gap when q is a non-residue"});
  }

  // i < i', same j < t. Only the type of the first factor matters.
  for (bool sa : {false, true}) {
    for (bool sb : {false, true}) {
      for (Residuosity w : {qr, qnr}) {
        r.push_back({name(sa) + "_ij*" + name(sb) + "_i'j" + (w == qr ? ":qr" : ":qnr"), w, II2J, r_ii2j,
                     [sa, sb](const P&, const X& x) { return ChiProduct{T(x.i, x.j, sa), T(x.i2, x.j, sb)}; },
                     [sa](const P& p, const X& x) {
                       Terms out{{fp(p, x.i2) * q0(p, x.j), T(x.i, x.j, sa)}};
                       add_level_sum(p, out, fp(p, x.i2) * fq(p, x.j), x.i, x.j, sa);
                       return out;
                     },
                     nullptr, ""});
      }
    }
    r.push_back({name(sa) + "_ij*chi_i'j=" + name(sa) + "_ij*chi*_i'j", any, II2J, r_ii2j,
                 [sa](const P&, const X& x) { return ChiProduct{T(x.i, x.j, sa), L(x.i2, x.j)}; }, nullptr,
                 [sa](const P&, const X& x) { return ChiProduct{T(x.i, x.j, sa), S(x.i2, x.j)}; }, ""});
  }
  return r;
}

std::vector<u64> integer_product(const CosetSystem& system, const ChiProduct& prod) {
  const u64 n = system.params().n;
  std::vector<u64> out(n, 0);
  for (u64 a : system.coset(prod.left).elements) {
    for (u64 c : system.coset(prod.right).elements) ++out[(a + c) % n];
  }
  return out;
}

void check_applies(const Parameters& params, const IdentityRule& rule, const CountIndices& idx) {
  if (!rule_applies(params, rule.when)) {
    throw std::out_of_range(rule.id + " does not apply: q is " + (params.qr_case ? "a residue" : "a non-residue") +
                            " mod p");
  }
  if (!rule.in_range(params, idx)) {
    throw std::out_of_range(rule.id + ": indices out of range (" + to_string(idx, rule.uses) + ")");
  }
}

}  // namespace

const std::vector<IdentityRule>& identity_rules() {
  static const std::vector<IdentityRule> rules = build_rules();
  return rules;
}

const IdentityRule& find_identity_rule(std::string_view id) {
  for (const auto& rule : identity_rules()) {
    if (rule.id == id) return rule;
  }
  throw std::out_of_range("unknown identity rule " + std::string(id));
}

std::vector<IdentityCase> enumerate_identity_cases(const Parameters& params) {
  std::vector<IdentityCase> out;
  for (const auto& rule : identity_rules()) {
    if (!rule_applies(params, rule.when)) continue;
    enumerate_indices(params, rule.uses, [&](const X& x) {
      if (rule.in_range(params, x)) out.push_back({&rule, x});
    });
  }
  return out;
}

IdentityCheck verify_identity(const ChiTable& chis, const IdentityRule& rule, const CountIndices& idx) {
  const Parameters& params = chis.params();
  check_applies(params, rule, idx);
  const ChiProduct lhs = rule.lhs(params, idx);
  IdentityCheck out{false, ring_mul(chis[lhs.left], chis[lhs.right]), RingElement(params.n, params.l),
                    RingElement(params.n, params.l)};
  if (rule.rhs_product) {
    const ChiProduct rhs = rule.rhs_product(params, idx);
    out.rhs = ring_mul(chis[rhs.left], chis[rhs.right]);
  } else {
    for (const auto& term : rule.rhs(params, idx)) out.rhs.add_scaled(chis[term.label], term.coeff % params.l);
  }
  out.residual = out.lhs - out.rhs;
  out.ok = out.residual.is_zero();
  return out;
}

std::optional<u64> integer_identity_violation(const CosetSystem& system, const IdentityRule& rule,
                                              const CountIndices& idx) {
  const Parameters& params = system.params();
  check_applies(params, rule, idx);
  const auto lhs = integer_product(system, rule.lhs(params, idx));
  std::vector<u64> rhs;
  if (rule.rhs_product) {
    rhs = integer_product(system, rule.rhs_product(params, idx));
  } else {
    rhs.assign(params.n, 0);
    for (const auto& term : rule.rhs(params, idx)) {
      for (u64 e : system.coset(term.label).elements) rhs[e] += term.coeff;
    }
  }
  for (u64 e = 0; e < params.n; ++e) {
    if (lhs[e] != rhs[e]) return e;
  }
  return std::nullopt;
}

IdentitySweepReport sweep_identities(const CosetSystem& system, bool integer_check) {
  const ChiTable chis(system);
  IdentitySweepReport report;
  for (const auto& c : enumerate_identity_cases(system.params())) {
    ++report.cases;
    const auto check = verify_identity(chis, *c.rule, c.idx);
    if (!check.ok) {
      report.mismatches.push_back({c.rule->id, to_string(c.idx, c.rule->uses), check.residual.weight(), false});
    }
    if (integer_check && integer_identity_violation(system, *c.rule, c.idx)) {
      report.integer_failures.push_back({c.rule->id, to_string(c.idx, c.rule->uses), 0, true});
    }
  }
  return report;
}

}  // namespace mcc
