#include "mcc/count_table.hpp"

#include <stdexcept>

#include "rule_support.hpp"

namespace mcc {

namespace {

namespace b = index_bits;
using namespace rules;

constexpr Residuosity any = Residuosity::any, qr = Residuosity::qr, qnr = Residuosity::qnr;
constexpr unsigned IJ = b::i | b::j, IJM = b::i | b::j | b::m, IJKM = b::i | b::j | b::k | b::m,
                   IJK = b::i | b::j | b::k, JM = b::j | b::m, IK = b::i | b::k,
                   II2JJ2 = b::i | b::i2 | b::j | b::j2, IJJ2 = b::i | b::j | b::j2,
                   IJJ2K = b::i | b::j | b::j2 | b::k, JJ2 = b::j | b::j2, II2J = b::i | b::i2 | b::j,
                   II2JM = b::i | b::i2 | b::j | b::m;

constexpr const char* kPhiTM = "coefficient taken as phi(q^(t-m))";
constexpr const char* kWhole = "every shift works, so the count is |X|; target flips type on an odd q-gap";
constexpr const char* kStarAnchor = "anchor read as a* in C*_{ij}";

std::vector<CountRule> build_rules() {
  std::vector<CountRule> r;
  // clang-format off

  // a in C_ij, X = C_ij.
  r.push_back({"Cij+Cij->Cij", any, IJ, r_ij,
      [](const P&, const X& x) { return CountTriple{L(x.i, x.j), L(x.i, x.j), L(x.i, x.j)}; },
      [](const P& p, const X& x) { return small(p, x.i) * q0(p, x.j); }, nullptr});
  r.push_back({"Cij+Cij->C*ij", any, IJ, r_ij,
      [](const P&, const X& x) { return CountTriple{L(x.i, x.j), L(x.i, x.j), S(x.i, x.j)}; },
      [](const P& p, const X& x) { return large(p, x.i) * q0(p, x.j); }, nullptr});
  r.push_back({"Cij+Cij->Cim:qr", qr, IJM, r_ijm,
      [](const P&, const X& x) { return CountTriple{L(x.i, x.j), L(x.i, x.j), L(x.i, x.m)}; },
      [](const P& p, const X& x) { return small(p, x.i) * fq(p, x.m); }, nullptr});
  r.push_back({"Cij+Cij->C*im:qr", qr, IJM, r_ijm,
      [](const P&, const X& x) { return CountTriple{L(x.i, x.j), L(x.i, x.j), S(x.i, x.m)}; },
      [](const P& p, const X& x) { return large(p, x.i) * fq(p, x.m); }, nullptr});
  r.push_back({"Cij+Cij->Cim:qnr:odd", qnr, IJM, r_ijm_odd,
      [](const P&, const X& x) { return CountTriple{L(x.i, x.j), L(x.i, x.j), L(x.i, x.m)}; },
      [](const P& p, const X& x) { return large(p, x.i) * fq(p, x.m); }, nullptr});
  r.push_back({"Cij+Cij->Cim:qnr:even", qnr, IJM, r_ijm_even,
      [](const P&, const X& x) { return CountTriple{L(x.i, x.j), L(x.i, x.j), L(x.i, x.m)}; },
      [](const P& p, const X& x) { return small(p, x.i) * fq(p, x.m); }, nullptr});
  r.push_back({"Cij+Cij->C*im:qnr:odd", qnr, IJM, r_ijm_odd,
      [](const P&, const X& x) { return CountTriple{L(x.i, x.j), L(x.i, x.j), S(x.i, x.m)}; },
      [](const P& p, const X& x) { return small(p, x.i) * fq(p, x.m); }, kPhiTM});
  r.push_back({"Cij+Cij->C*im:qnr:even", qnr, IJM, r_ijm_even,
      [](const P&, const X& x) { return CountTriple{L(x.i, x.j), L(x.i, x.j), S(x.i, x.m)}; },
      [](const P& p, const X& x) { return large(p, x.i) * fq(p, x.m); }, nullptr});

  // a* in C*_ij, X = C*_ij.
  r.push_back({"C*ij+C*ij->Cij", any, IJ, r_ij,
      [](const P&, const X& x) { return CountTriple{S(x.i, x.j), S(x.i, x.j), L(x.i, x.j)}; },
      [](const P& p, const X& x) { return large(p, x.i) * q0(p, x.j); }, nullptr});
  r.push_back({"C*ij+C*ij->C*ij", any, IJ, r_ij,
      [](const P&, const X& x) { return CountTriple{S(x.i, x.j), S(x.i, x.j), S(x.i, x.j)}; },
      [](const P& p, const X& x) { return small(p, x.i) * q0(p, x.j); }, nullptr});
  r.push_back({"C*ij+C*ij->Cim:qr", qr, IJM, r_ijm,
      [](const P&, const X& x) { return CountTriple{S(x.i, x.j), S(x.i, x.j), L(x.i, x.m)}; },
      [](const P& p, const X& x) { return large(p, x.i) * fq(p, x.m); }, nullptr});
  r.push_back({"C*ij+C*ij->C*im:qr", qr, IJM, r_ijm,
      [](const P&, const X& x) { return CountTriple{S(x.i, x.j), S(x.i, x.j), S(x.i, x.m)}; },
      [](const P& p, const X& x) { return small(p, x.i) * fq(p, x.m); }, nullptr});
  r.push_back({"C*ij+C*ij->Cim:qnr:odd", qnr, IJM, r_ijm_odd,
      [](const P&, const X& x) { return CountTriple{S(x.i, x.j), S(x.i, x.j), L(x.i, x.m)}; },
      [](const P& p, const X& x) { return small(p, x.i) * fq(p, x.m); }, nullptr});
  r.push_back({"C*ij+C*ij->Cim:qnr:even", qnr, IJM, r_ijm_even,
      [](const P&, const X& x) { return CountTriple{S(x.i, x.j), S(x.i, x.j), L(x.i, x.m)}; },
      [](const P& p, const X& x) { return large(p, x.i) * fq(p, x.m); }, nullptr});
  r.push_back({"C*ij+C*ij->C*im:qnr:odd", qnr, IJM, r_ijm_odd,
      [](const P&, const X& x) { return CountTriple{S(x.i, x.j), S(x.i, x.j), S(x.i, x.m)}; },
      [](const P& p, const X& x) { return large(p, x.i) * fq(p, x.m); }, kPhiTM});
  r.push_back({"C*ij+C*ij->C*im:qnr:even", qnr, IJM, r_ijm_even,
      [](const P&, const X& x) { return CountTriple{S(x.i, x.j), S(x.i, x.j), S(x.i, x.m)}; },
      [](const P& p, const X& x) { return small(p, x.i) * fq(p, x.m); }, nullptr});

  // a in C_ij, X = C*_ij.
  r.push_back({"Cij+C*ij->Cij", any, IJ, r_ij,
      [](const P&, const X& x) { return CountTriple{L(x.i, x.j), S(x.i, x.j), L(x.i, x.j)}; },
      [](const P& p, const X& x) { return small(p, x.i) * q0(p, x.j); }, nullptr});
  r.push_back({"Cij+C*ij->C*ij", any, IJ, r_ij,
      [](const P&, const X& x) { return CountTriple{L(x.i, x.j), S(x.i, x.j), S(x.i, x.j)}; },
      [](const P& p, const X& x) { return small(p, x.i) * q0(p, x.j); }, nullptr});
  r.push_back({"Cij+C*ij->Cim", any, IJM, r_ijm,
      [](const P&, const X& x) { return CountTriple{L(x.i, x.j), S(x.i, x.j), L(x.i, x.m)}; },
      [](const P& p, const X& x) { return small(p, x.i) * fq(p, x.m); }, nullptr});
  r.push_back({"Cij+C*ij->C*im", any, IJM, r_ijm,
      [](const P&, const X& x) { return CountTriple{L(x.i, x.j), S(x.i, x.j), S(x.i, x.m)}; },
      [](const P& p, const X& x) { return small(p, x.i) * fq(p, x.m); }, nullptr});
  r.push_back({"Cij+C*ij->Ckm", any, IJKM, r_ijkm,
      [](const P&, const X& x) { return CountTriple{L(x.i, x.j), S(x.i, x.j), L(x.k, x.m)}; },
      [](const P& p, const X& x) { return fp(p, x.k) * fq(p, x.m); }, nullptr});
  r.push_back({"Cij+C*ij->C*km", any, IJKM, r_ijkm,
      [](const P&, const X& x) { return CountTriple{L(x.i, x.j), S(x.i, x.j), S(x.k, x.m)}; },
      [](const P& p, const X& x) { return fp(p, x.k) * fq(p, x.m); }, nullptr});
  r.push_back({"Cij+C*ij->Csj", any, IJ, r_ij,
      [](const P& p, const X& x) { return CountTriple{L(x.i, x.j), S(x.i, x.j), L(p.s, x.j)}; },
      [](const P& p, const X& x) { return q0(p, x.j); }, nullptr});
  r.push_back({"Cij+C*ij->Csm", any, IJM, r_ijm,
      [](const P& p, const X& x) { return CountTriple{L(x.i, x.j), S(x.i, x.j), L(p.s, x.m)}; },
      [](const P& p, const X& x) { return fq(p, x.m); }, nullptr});
  r.push_back({"Cij+C*ij->Ckj", any, IJK, r_ijk,
      [](const P&, const X& x) { return CountTriple{L(x.i, x.j), S(x.i, x.j), L(x.k, x.j)}; },
      [](const P& p, const X& x) { return fp(p, x.k) * q0(p, x.j); }, nullptr});
  r.push_back({"Cij+C*ij->C*kj", any, IJK, r_ijk,
      [](const P&, const X& x) { return CountTriple{L(x.i, x.j), S(x.i, x.j), S(x.k, x.j)}; },
      [](const P& p, const X& x) { return fp(p, x.k) * q0(p, x.j); }, nullptr});

  // a in C_sj.
  r.push_back({"Csj+Csj->Csj", any, b::j, r_sj,
      [](const P& p, const X& x) { return CountTriple{L(p.s, x.j), L(p.s, x.j), L(p.s, x.j)}; },
      [](const P& p, const X& x) { return q0(p, x.j); }, nullptr});
  r.push_back({"Csj+Csj->Csm", any, JM, r_sjm,
      [](const P& p, const X& x) { return CountTriple{L(p.s, x.j), L(p.s, x.j), L(p.s, x.m)}; },
      [](const P& p, const X& x) { return fq(p, x.m); }, nullptr});

  // j = t.
  r.push_back({"Cit+Cit->Cit", any, b::i, r_i,
      [](const P& p, const X& x) { return CountTriple{L(x.i, p.t), L(x.i, p.t), L(x.i, p.t)}; },
      [](const P& p, const X& x) { return small(p, x.i); }, nullptr});
  r.push_back({"C*it+C*it->C*it", any, b::i, r_i,
      [](const P& p, const X& x) { return CountTriple{S(x.i, p.t), S(x.i, p.t), S(x.i, p.t)}; },
      [](const P& p, const X& x) { return small(p, x.i); }, nullptr});
  r.push_back({"Cit+Cit->C*it", any, b::i, r_i,
      [](const P& p, const X& x) { return CountTriple{L(x.i, p.t), L(x.i, p.t), S(x.i, p.t)}; },
      [](const P& p, const X& x) { return large(p, x.i); }, nullptr});
  r.push_back({"C*it+C*it->Cit", any, b::i, r_i,
      [](const P& p, const X& x) { return CountTriple{S(x.i, p.t), S(x.i, p.t), L(x.i, p.t)}; },
      [](const P& p, const X& x) { return large(p, x.i); }, nullptr});
  r.push_back({"Cit+C*it->Cit", any, b::i, r_i,
      [](const P& p, const X& x) { return CountTriple{L(x.i, p.t), S(x.i, p.t), L(x.i, p.t)}; },
      [](const P& p, const X& x) { return small(p, x.i); }, nullptr});
  r.push_back({"Cit+C*it->C*it", any, b::i, r_i,
      [](const P& p, const X& x) { return CountTriple{L(x.i, p.t), S(x.i, p.t), S(x.i, p.t)}; },
      [](const P& p, const X& x) { return small(p, x.i); }, nullptr});
  r.push_back({"Cit+C*it->Ckt", any, IK, r_ik,
      [](const P& p, const X& x) { return CountTriple{L(x.i, p.t), S(x.i, p.t), L(x.k, p.t)}; },
      [](const P& p, const X& x) { return fp(p, x.k); }, nullptr});
  r.push_back({"Cit+C*it->C*kt", any, IK, r_ik,
      [](const P& p, const X& x) { return CountTriple{L(x.i, p.t), S(x.i, p.t), S(x.k, p.t)}; },
      [](const P& p, const X& x) { return fp(p, x.k); }, nullptr});
  r.push_back({"Cit+C*it->C0", any, b::i, r_i,
      [](const P& p, const X& x) { return CountTriple{L(x.i, p.t), S(x.i, p.t), L(p.s, p.t)}; },
      [](const P&, const X&) { return u64{1}; }, nullptr});

  // i < i', j < j'.
  r.push_back({"Cij+Ci'j'->Cij", any, II2JJ2, r_ii2jj2,
      [](const P&, const X& x) { return CountTriple{L(x.i, x.j), L(x.i2, x.j2), L(x.i, x.j)}; },
      [](const P& p, const X& x) { return fp(p, x.i2) * fq(p, x.j2); }, nullptr});
  r.push_back({"Cij+C*i'j'->Cij", any, II2JJ2, r_ii2jj2,
      [](const P&, const X& x) { return CountTriple{L(x.i, x.j), S(x.i2, x.j2), L(x.i, x.j)}; },
      [](const P& p, const X& x) { return fp(p, x.i2) * fq(p, x.j2); }, nullptr});
  r.push_back({"C*ij+Ci'j'->C*ij", any, II2JJ2, r_ii2jj2,
      [](const P&, const X& x) { return CountTriple{S(x.i, x.j), L(x.i2, x.j2), S(x.i, x.j)}; },
      [](const P& p, const X& x) { return fp(p, x.i2) * fq(p, x.j2); }, kStarAnchor});
  r.push_back({"C*ij+C*i'j'->C*ij", any, II2JJ2, r_ii2jj2,
      [](const P&, const X& x) { return CountTriple{S(x.i, x.j), S(x.i2, x.j2), S(x.i, x.j)}; },
      [](const P& p, const X& x) { return fp(p, x.i2) * fq(p, x.j2); }, kStarAnchor});

  // i < i', j' < j.
  r.push_back({"Cij+Ci'j'->Cij'", any, II2JJ2, r_ii2j2j,
      [](const P& p, const X& x) {
        return CountTriple{L(x.i, x.j), L(x.i2, x.j2), flip(p, L(x.i, x.j2), odd(x.j, x.j2))}; },
      [](const P& p, const X& x) { return fp(p, x.i2) * fq(p, x.j2); }, kWhole});
  r.push_back({"Cij+C*i'j'->Cij'", any, II2JJ2, r_ii2j2j,
      [](const P& p, const X& x) {
        return CountTriple{L(x.i, x.j), S(x.i2, x.j2), flip(p, L(x.i, x.j2), odd(x.j, x.j2))}; },
      [](const P& p, const X& x) { return fp(p, x.i2) * fq(p, x.j2); }, kWhole});
  r.push_back({"C*ij+Ci'j'->C*ij'", any, II2JJ2, r_ii2j2j,
      [](const P& p, const X& x) {
        return CountTriple{S(x.i, x.j), L(x.i2, x.j2), flip(p, S(x.i, x.j2), odd(x.j, x.j2))}; },
      [](const P& p, const X& x) { return fp(p, x.i2) * fq(p, x.j2); }, kWhole});
  r.push_back({"C*ij+C*i'j'->C*ij'", any, II2JJ2, r_ii2j2j,
      [](const P& p, const X& x) {
        return CountTriple{S(x.i, x.j), S(x.i2, x.j2), flip(p, S(x.i, x.j2), odd(x.j, x.j2))}; },
      [](const P& p, const X& x) { return fp(p, x.i2) * fq(p, x.j2); }, kWhole});

  // a in C_ij, X = C_ij', j < j'.
  r.push_back({"Cij+Cij'->Cij", any, IJJ2, r_ijj2,
      [](const P&, const X& x) { return CountTriple{L(x.i, x.j), L(x.i, x.j2), L(x.i, x.j)}; },
      [](const P& p, const X& x) { return small(p, x.i) * fq(p, x.j2); }, nullptr});
  r.push_back({"Cij+Cij'->C*ij:qr", qr, IJJ2, r_ijj2,
      [](const P&, const X& x) { return CountTriple{L(x.i, x.j), L(x.i, x.j2), S(x.i, x.j)}; },
      [](const P& p, const X& x) { return large(p, x.i) * fq(p, x.j2); }, nullptr});
  r.push_back({"Cij+Cij'->C*ij:qnr:even", qnr, IJJ2, r_ijj2_even,
      [](const P&, const X& x) { return CountTriple{L(x.i, x.j), L(x.i, x.j2), S(x.i, x.j)}; },
      [](const P& p, const X& x) { return large(p, x.i) * fq(p, x.j2); }, nullptr});
  r.push_back({"Cij+Cij'->C*ij:qnr:odd", qnr, IJJ2, r_ijj2_odd,
      [](const P&, const X& x) { return CountTriple{L(x.i, x.j), L(x.i, x.j2), S(x.i, x.j)}; },
      [](const P& p, const X& x) { return small(p, x.i) * fq(p, x.j2); }, nullptr});
  r.push_back({"Cij+Cij'->Ckj:qnr:odd", qnr, IJJ2K, r_ijj2k_odd,
      [](const P&, const X& x) { return CountTriple{L(x.i, x.j), L(x.i, x.j2), L(x.k, x.j)}; },
      [](const P& p, const X& x) { return fp(p, x.k) * fq(p, x.j2); }, nullptr});
  r.push_back({"Cij+Cij'->C*kj:qnr:odd", qnr, IJJ2K, r_ijj2k_odd,
      [](const P&, const X& x) { return CountTriple{L(x.i, x.j), L(x.i, x.j2), S(x.k, x.j)}; },
      [](const P& p, const X& x) { return fp(p, x.k) * fq(p, x.j2); }, nullptr});
  r.push_back({"Cij+Cij'->Csj:qnr:odd", qnr, IJJ2, r_ijj2_odd,
      [](const P& p, const X& x) { return CountTriple{L(x.i, x.j), L(x.i, x.j2), L(p.s, x.j)}; },
      [](const P& p, const X& x) { return fq(p, x.j2); }, nullptr});

  // a* in C*_ij, X = C*_ij', j < j'.
  r.push_back({"C*ij+C*ij'->C*ij", any, IJJ2, r_ijj2,
      [](const P&, const X& x) { return CountTriple{S(x.i, x.j), S(x.i, x.j2), S(x.i, x.j)}; },
      [](const P& p, const X& x) { return small(p, x.i) * fq(p, x.j2); }, nullptr});
  r.push_back({"C*ij+C*ij'->Cij:qr", qr, IJJ2, r_ijj2,
      [](const P&, const X& x) { return CountTriple{S(x.i, x.j), S(x.i, x.j2), L(x.i, x.j)}; },
      [](const P& p, const X& x) { return large(p, x.i) * fq(p, x.j2); }, nullptr});
  r.push_back({"C*ij+C*ij'->Cij:qnr:even", qnr, IJJ2, r_ijj2_even,
      [](const P&, const X& x) { return CountTriple{S(x.i, x.j), S(x.i, x.j2), L(x.i, x.j)}; },
      [](const P& p, const X& x) { return large(p, x.i) * fq(p, x.j2); }, nullptr});
  r.push_back({"C*ij+C*ij'->Cij:qnr:odd", qnr, IJJ2, r_ijj2_odd,
      [](const P&, const X& x) { return CountTriple{S(x.i, x.j), S(x.i, x.j2), L(x.i, x.j)}; },
      [](const P& p, const X& x) { return small(p, x.i) * fq(p, x.j2); }, nullptr});
  r.push_back({"C*ij+C*ij'->Ckj:qnr:odd", qnr, IJJ2K, r_ijj2k_odd,
      [](const P&, const X& x) { return CountTriple{S(x.i, x.j), S(x.i, x.j2), L(x.k, x.j)}; },
      [](const P& p, const X& x) { return fp(p, x.k) * fq(p, x.j2); }, nullptr});
  r.push_back({"C*ij+C*ij'->C*kj:qnr:odd", qnr, IJJ2K, r_ijj2k_odd,
      [](const P&, const X& x) { return CountTriple{S(x.i, x.j), S(x.i, x.j2), S(x.k, x.j)}; },
      [](const P& p, const X& x) { return fp(p, x.k) * fq(p, x.j2); }, "anchor and shift read as a* and C*_{ij'}"});
  r.push_back({"C*ij+C*ij'->Csj:qnr:odd", qnr, IJJ2, r_ijj2_odd,
      [](const P& p, const X& x) { return CountTriple{S(x.i, x.j), S(x.i, x.j2), L(p.s, x.j)}; },
      [](const P& p, const X& x) { return fq(p, x.j2); }, nullptr});

  // a in C_ij, X = C*_ij', j < j'. Types differ unless q is a non-residue and
  // j' - j is odd.
  for (Residuosity w : {qr, qnr}) {
    const bool is_qr = w == qr;
    auto range = is_qr ? r_ijj2 : r_ijj2_even;
    auto range_k = is_qr ? r_ijj2k : r_ijj2k_even;
    r.push_back({is_qr ? "Cij+C*ij'->Cij:qr" : "Cij+C*ij'->Cij:qnr:even", w, IJJ2, range,
        [](const P&, const X& x) { return CountTriple{L(x.i, x.j), S(x.i, x.j2), L(x.i, x.j)}; },
        [](const P& p, const X& x) { return small(p, x.i) * fq(p, x.j2); }, nullptr});
    r.push_back({is_qr ? "Cij+C*ij'->C*ij:qr" : "Cij+C*ij'->C*ij:qnr:even", w, IJJ2, range,
        [](const P&, const X& x) { return CountTriple{L(x.i, x.j), S(x.i, x.j2), S(x.i, x.j)}; },
        [](const P& p, const X& x) { return small(p, x.i) * fq(p, x.j2); }, nullptr});
    r.push_back({is_qr ? "Cij+C*ij'->Ckj:qr" : "Cij+C*ij'->Ckj:qnr:even", w, IJJ2K, range_k,
        [](const P&, const X& x) { return CountTriple{L(x.i, x.j), S(x.i, x.j2), L(x.k, x.j)}; },
        [](const P& p, const X& x) { return fp(p, x.k) * fq(p, x.j2); }, nullptr});
    r.push_back({is_qr ? "Cij+C*ij'->C*kj:qr" : "Cij+C*ij'->C*kj:qnr:even", w, IJJ2K, range_k,
        [](const P&, const X& x) { return CountTriple{L(x.i, x.j), S(x.i, x.j2), S(x.k, x.j)}; },
        [](const P& p, const X& x) { return fp(p, x.k) * fq(p, x.j2); }, nullptr});
    r.push_back({is_qr ? "Cij+C*ij'->Csj:qr" : "Cij+C*ij'->Csj:qnr:even", w, IJJ2, range,
        [](const P& p, const X& x) { return CountTriple{L(x.i, x.j), S(x.i, x.j2), L(p.s, x.j)}; },
        [](const P& p, const X& x) { return fq(p, x.j2); }, nullptr});
  }
  r.push_back({"Cij+C*ij'->Cij:qnr:odd", qnr, IJJ2, r_ijj2_odd,
      [](const P&, const X& x) { return CountTriple{L(x.i, x.j), S(x.i, x.j2), L(x.i, x.j)}; },
      [](const P& p, const X& x) { return small(p, x.i) * fq(p, x.j2); }, nullptr});
  r.push_back({"Cij+C*ij'->C*ij:qnr:odd", qnr, IJJ2, r_ijj2_odd,
      [](const P&, const X& x) { return CountTriple{L(x.i, x.j), S(x.i, x.j2), S(x.i, x.j)}; },
      [](const P& p, const X& x) { return large(p, x.i) * fq(p, x.j2); }, nullptr});

  // a* in C*_ij, X = C_ij', j < j'.
  for (Residuosity w : {qr, qnr}) {
    const bool is_qr = w == qr;
    auto range = is_qr ? r_ijj2 : r_ijj2_even;
    auto range_k = is_qr ? r_ijj2k : r_ijj2k_even;
    r.push_back({is_qr ? "C*ij+Cij'->Cij:qr" : "C*ij+Cij'->Cij:qnr:even", w, IJJ2, range,
        [](const P&, const X& x) { return CountTriple{S(x.i, x.j), L(x.i, x.j2), L(x.i, x.j)}; },
        [](const P& p, const X& x) { return small(p, x.i) * fq(p, x.j2); }, nullptr});
    r.push_back({is_qr ? "C*ij+Cij'->C*ij:qr" : "C*ij+Cij'->C*ij:qnr:even", w, IJJ2, range,
        [](const P&, const X& x) { return CountTriple{S(x.i, x.j), L(x.i, x.j2), S(x.i, x.j)}; },
        [](const P& p, const X& x) { return small(p, x.i) * fq(p, x.j2); }, nullptr});
    r.push_back({is_qr ? "C*ij+Cij'->Ckj:qr" : "C*ij+Cij'->Ckj:qnr:even", w, IJJ2K, range_k,
        [](const P&, const X& x) { return CountTriple{S(x.i, x.j), L(x.i, x.j2), L(x.k, x.j)}; },
        [](const P& p, const X& x) { return fp(p, x.k) * fq(p, x.j2); }, nullptr});
    r.push_back({is_qr ? "C*ij+Cij'->C*kj:qr" : "C*ij+Cij'->C*kj:qnr:even", w, IJJ2K, range_k,
        [](const P&, const X& x) { return CountTriple{S(x.i, x.j), L(x.i, x.j2), S(x.k, x.j)}; },
        [](const P& p, const X& x) { return fp(p, x.k) * fq(p, x.j2); }, nullptr});
    r.push_back({is_qr ? "C*ij+Cij'->Csj:qr" : "C*ij+Cij'->Csj:qnr:even", w, IJJ2, range,
        [](const P& p, const X& x) { return CountTriple{S(x.i, x.j), L(x.i, x.j2), L(p.s, x.j)}; },
        [](const P& p, const X& x) { return fq(p, x.j2); }, nullptr});
  }
  r.push_back({"C*ij+Cij'->Cij:qnr:odd", qnr, IJJ2, r_ijj2_odd,
      [](const P&, const X& x) { return CountTriple{S(x.i, x.j), L(x.i, x.j2), L(x.i, x.j)}; },
      [](const P& p, const X& x) { return large(p, x.i) * fq(p, x.j2); }, nullptr});
  r.push_back({"C*ij+Cij'->C*ij:qnr:odd", qnr, IJJ2, r_ijj2_odd,
      [](const P&, const X& x) { return CountTriple{S(x.i, x.j), L(x.i, x.j2), S(x.i, x.j)}; },
      [](const P& p, const X& x) { return small(p, x.i) * fq(p, x.j2); }, nullptr});

  // Shifts by C_sj'.
  r.push_back({"Csj+Csj'->Csj", any, JJ2, r_sjj2,
      [](const P& p, const X& x) { return CountTriple{L(p.s, x.j), L(p.s, x.j2), L(p.s, x.j)}; },
      [](const P& p, const X& x) { return fq(p, x.j2); }, nullptr});
  r.push_back({"Cij+Csj'->Cij", any, IJJ2, r_ijj2,
      [](const P& p, const X& x) { return CountTriple{L(x.i, x.j), L(p.s, x.j2), L(x.i, x.j)}; },
      [](const P& p, const X& x) { return fq(p, x.j2); }, nullptr});
  r.push_back({"C*ij+Csj'->C*ij", any, IJJ2, r_ijj2,
      [](const P& p, const X& x) { return CountTriple{S(x.i, x.j), L(p.s, x.j2), S(x.i, x.j)}; },
      [](const P& p, const X& x) { return fq(p, x.j2); }, nullptr});
  r.push_back({"Cij+Csj'->Cij'", any, IJJ2, r_ij2j,
      [](const P& p, const X& x) {
        return CountTriple{L(x.i, x.j), L(p.s, x.j2), flip(p, L(x.i, x.j2), odd(x.j, x.j2))}; },
      [](const P& p, const X& x) { return fq(p, x.j2); }, kWhole});
  r.push_back({"C*ij+Csj'->C*ij'", any, IJJ2, r_ij2j,
      [](const P& p, const X& x) {
        return CountTriple{S(x.i, x.j), L(p.s, x.j2), flip(p, S(x.i, x.j2), odd(x.j, x.j2))}; },
      [](const P& p, const X& x) { return fq(p, x.j2); }, kWhole});

  // i < i', same j. The shift's type does not matter.
  r.push_back({"Cij+Ci'j->Cij", any, II2J, r_ii2j,
      [](const P&, const X& x) { return CountTriple{L(x.i, x.j), L(x.i2, x.j), L(x.i, x.j)}; },
      [](const P& p, const X& x) { return fp(p, x.i2) * q0(p, x.j); }, nullptr});
  r.push_back({"Cij+Ci'j->Cim:qr", qr, II2JM, r_ii2jm,
      [](const P&, const X& x) { return CountTriple{L(x.i, x.j), L(x.i2, x.j), L(x.i, x.m)}; },
      [](const P& p, const X& x) { return fp(p, x.i2) * fq(p, x.m); }, nullptr});
  r.push_back({"Cij+Ci'j->C*im:qnr:odd", qnr, II2JM, r_ii2jm_odd,
      [](const P&, const X& x) { return CountTriple{L(x.i, x.j), L(x.i2, x.j), S(x.i, x.m)}; },
      [](const P& p, const X& x) { return fp(p, x.i2) * fq(p, x.m); }, nullptr});
  r.push_back({"Cij+Ci'j->Cim:qnr:even", qnr, II2JM, r_ii2jm_even,
      [](const P&, const X& x) { return CountTriple{L(x.i, x.j), L(x.i2, x.j), L(x.i, x.m)}; },
      [](const P& p, const X& x) { return fp(p, x.i2) * fq(p, x.m); }, nullptr});

  r.push_back({"C*ij+C*i'j->C*ij", any, II2J, r_ii2j,
      [](const P&, const X& x) { return CountTriple{S(x.i, x.j), S(x.i2, x.j), S(x.i, x.j)}; },
      [](const P& p, const X& x) { return fp(p, x.i2) * q0(p, x.j); }, nullptr});
  r.push_back({"C*ij+C*i'j->C*im:qr", qr, II2JM, r_ii2jm,
      [](const P&, const X& x) { return CountTriple{S(x.i, x.j), S(x.i2, x.j), S(x.i, x.m)}; },
      [](const P& p, const X& x) { return fp(p, x.i2) * fq(p, x.m); }, nullptr});
  r.push_back({"C*ij+C*i'j->Cim:qnr:odd", qnr, II2JM, r_ii2jm_odd,
      [](const P&, const X& x) { return CountTriple{S(x.i, x.j), S(x.i2, x.j), L(x.i, x.m)}; },
      [](const P& p, const X& x) { return fp(p, x.i2) * fq(p, x.m); }, nullptr});
  r.push_back({"C*ij+C*i'j->C*im:qnr:even", qnr, II2JM, r_ii2jm_even,
      [](const P&, const X& x) { return CountTriple{S(x.i, x.j), S(x.i2, x.j), S(x.i, x.m)}; },
      [](const P& p, const X& x) { return fp(p, x.i2) * fq(p, x.m); }, nullptr});

  r.push_back({"Cij+C*i'j->Cij", any, II2J, r_ii2j,
      [](const P&, const X& x) { return CountTriple{L(x.i, x.j), S(x.i2, x.j), L(x.i, x.j)}; },
      [](const P& p, const X& x) { return fp(p, x.i2) * q0(p, x.j); }, nullptr});
  r.push_back({"Cij+C*i'j->Cim:qr", qr, II2JM, r_ii2jm,
      [](const P&, const X& x) { return CountTriple{L(x.i, x.j), S(x.i2, x.j), L(x.i, x.m)}; },
      [](const P& p, const X& x) { return fp(p, x.i2) * fq(p, x.m); }, nullptr});
  r.push_back({"Cij+C*i'j->C*im:qnr:odd", qnr, II2JM, r_ii2jm_odd,
      [](const P&, const X& x) { return CountTriple{L(x.i, x.j), S(x.i2, x.j), S(x.i, x.m)}; },
      [](const P& p, const X& x) { return fp(p, x.i2) * fq(p, x.m); }, nullptr});
  r.push_back({"Cij+C*i'j->Cim:qnr:even", qnr, II2JM, r_ii2jm_even,
      [](const P&, const X& x) { return CountTriple{L(x.i, x.j), S(x.i2, x.j), L(x.i, x.m)}; },
      [](const P& p, const X& x) { return fp(p, x.i2) * fq(p, x.m); }, nullptr});

  r.push_back({"C*ij+Ci'j->C*ij", any, II2J, r_ii2j,
      [](const P&, const X& x) { return CountTriple{S(x.i, x.j), L(x.i2, x.j), S(x.i, x.j)}; },
      [](const P& p, const X& x) { return fp(p, x.i2) * q0(p, x.j); }, nullptr});
  r.push_back({"C*ij+Ci'j->C*im:qr", qr, II2JM, r_ii2jm,
      [](const P&, const X& x) { return CountTriple{S(x.i, x.j), L(x.i2, x.j), S(x.i, x.m)}; },
      [](const P& p, const X& x) { return fp(p, x.i2) * fq(p, x.m); }, "shift read as C_{i'j}"});
  r.push_back({"C*ij+Ci'j->Cim:qnr:odd", qnr, II2JM, r_ii2jm_odd,
      [](const P&, const X& x) { return CountTriple{S(x.i, x.j), L(x.i2, x.j), L(x.i, x.m)}; },
      [](const P& p, const X& x) { return fp(p, x.i2) * fq(p, x.m); }, nullptr});
  r.push_back({"C*ij+Ci'j->C*im:qnr:even", qnr, II2JM, r_ii2jm_even,
      [](const P&, const X& x) { return CountTriple{S(x.i, x.j), L(x.i2, x.j), S(x.i, x.m)}; },
      [](const P& p, const X& x) { return fp(p, x.i2) * fq(p, x.m); }, nullptr});
  // clang-format on
  return r;
}

}  // namespace

std::string to_string(const CountIndices& idx, unsigned uses) {
  std::string out;
  auto add = [&](unsigned bit, const char* name, unsigned value) {
    if (!(uses & bit)) return;
    if (!out.empty()) out += ' ';
    out += std::string(name) + "=" + std::to_string(value);
  };
  add(b::i, "i", idx.i);
  add(b::i2, "i'", idx.i2);
  add(b::j, "j", idx.j);
  add(b::j2, "j'", idx.j2);
  add(b::k, "k", idx.k);
  add(b::m, "m", idx.m);
  return out;
}

const std::vector<CountRule>& count_rules() {
  static const std::vector<CountRule> rules = build_rules();
  return rules;
}

const CountRule& find_count_rule(std::string_view id) {
  for (const auto& rule : count_rules()) {
    if (id == rule.id) return rule;
  }
  throw std::out_of_range("unknown count rule " + std::string(id));
}

bool rule_applies(const Parameters& params, Residuosity when) {
  return when == Residuosity::any || (when == Residuosity::qr) == params.qr_case;
}

u64 closed_form_count(const Parameters& params, std::string_view id, const CountIndices& idx) {
  const CountRule& rule = find_count_rule(id);
  if (!rule_applies(params, rule.when)) {
    throw std::out_of_range(std::string(id) + " does not apply: q is " +
                            (params.qr_case ? "a residue" : "a non-residue") + " mod p");
  }
  if (!rule.in_range(params, idx)) {
    throw std::out_of_range(std::string(id) + ": indices out of range (" + to_string(idx, rule.uses) + ")");
  }
  return rule.value(params, idx);
}

std::vector<CountCase> enumerate_count_cases(const Parameters& params) {
  std::vector<CountCase> out;
  for (const auto& rule : count_rules()) {
    if (!rule_applies(params, rule.when)) continue;
    enumerate_indices(params, rule.uses, [&](const X& x) {
      if (rule.in_range(params, x)) out.push_back({&rule, x, rule.labels(params, x), rule.value(params, x)});
    });
  }
  return out;
}

const std::vector<ResidueCountRule>& residue_count_rules() {
  static const std::vector<ResidueCountRule> rules = {
      {"r+R->R", true, true, true, false},   {"r+N->R", true, false, true, false},
      {"r+N->N", true, false, false, false}, {"r+R->N", true, true, false, true},
      {"n+N->N", false, false, false, false}, {"n+R->R", false, true, true, false},
      {"n+R->N", false, true, false, false}, {"n+N->R", false, false, true, true},
  };
  return rules;
}

u64 residue_closed_form(const Parameters& params, const ResidueCountRule& rule) {
  const u64 scale = params.pow_p(params.s - 1);
  return (rule.large ? (params.p + 1) / 4 : (params.p - 3) / 4) * scale;
}

u64 residue_intersection_count(const QRSets& sets, u64 r, bool shifted_residue, bool target_residue) {
  const auto& shifted = shifted_residue ? sets.residues : sets.nonresidues;
  u64 count = 0;
  for (u64 x : shifted) {
    const u64 y = (r + x) % sets.modulus;
    if (y % sets.p != 0 && sets.is_residue(y) == target_residue) ++count;
  }
  return count;
}

CountSweepReport sweep_counts(const CosetSystem& system, bool all_anchors) {
  const Parameters& params = system.params();
  CountSweepReport report;

  const QRSets sets = quadratic_residue_sets(params.p, params.s);
  for (const auto& rule : residue_count_rules()) {
    ++report.cases;
    const u64 expected = residue_closed_form(params, rule);
    const auto& anchors = rule.anchor_residue ? sets.residues : sets.nonresidues;
    for (std::size_t a = 0; a < anchors.size() && (all_anchors || a == 0); ++a) {
      ++report.checks;
      const u64 actual = residue_intersection_count(sets, anchors[a], rule.shifted_residue, rule.target_residue);
      if (actual != expected) {
        report.mismatches.push_back({rule.id, "", {}, anchors[a], expected, actual});
      }
    }
  }

  for (const auto& c : enumerate_count_cases(params)) {
    ++report.cases;
    const Coset& anchor = system.coset(c.labels.anchor);
    for (std::size_t a = 0; a < anchor.size() && (all_anchors || a == 0); ++a) {
      const u64 element = all_anchors ? anchor.elements[a] : anchor.representative;
      ++report.checks;
      const u64 actual = intersection_count(system, element, c.labels.shifted, c.labels.target);
      if (actual != c.value) {
        report.mismatches.push_back(
            {c.rule->id, to_string(c.idx, c.rule->uses), c.labels, element, c.value, actual});
      }
    }
  }
  return report;
}

}  // namespace mcc
