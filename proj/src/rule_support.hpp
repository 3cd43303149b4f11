#pragma once

// Coefficient shapes and index ranges shared by the count and identity tables.

#include "mcc/count_table.hpp"

namespace mcc::rules {

using P = Parameters;
using X = CountIndices;

inline CosetLabel L(unsigned i, unsigned j) { return {i, j, false}; }
inline CosetLabel S(unsigned i, unsigned j) { return {i, j, true}; }

// Coefficient shapes.
inline u64 small(const P& p, unsigned i) { return (p.p - 3) / 4 * p.pow_p(p.s - i - 1); }
inline u64 large(const P& p, unsigned i) { return (p.p + 1) / 4 * p.pow_p(p.s - i - 1); }
inline u64 q0(const P& p, unsigned j) { return (p.q - 2) * p.pow_q(p.t - j - 1); }
inline u64 fq(const P& p, unsigned m) { return p.phi_q(p.t - m); }
inline u64 fp(const P& p, unsigned k) { return p.phi_p(p.s - k) / 2; }

inline bool odd(unsigned a, unsigned b) { return (a + b) % 2 == 1; }

// In the non-residue case an odd gap between q-exponents moves an element
// between C_{ij} and C*_{ij}.
inline CosetLabel flip(const P& p, CosetLabel c, bool odd_gap) {
  if (!p.qr_case && odd_gap) c.starred = !c.starred;
  return c;
}

// Index ranges.
inline bool r_ij(const P& p, const X& x) { return x.i < p.s && x.j < p.t; }
inline bool r_ijm(const P& p, const X& x) { return x.i < p.s && x.j < x.m && x.m <= p.t; }
inline bool r_ijm_odd(const P& p, const X& x) { return r_ijm(p, x) && odd(x.m, x.j); }
inline bool r_ijm_even(const P& p, const X& x) { return r_ijm(p, x) && !odd(x.m, x.j); }
inline bool r_ijkm(const P& p, const X& x) { return x.i < x.k && x.k < p.s && x.j < x.m && x.m <= p.t; }
inline bool r_ijk(const P& p, const X& x) { return x.i < x.k && x.k < p.s && x.j < p.t; }
inline bool r_sj(const P& p, const X& x) { return x.j < p.t; }
inline bool r_sjm(const P& p, const X& x) { return x.j < x.m && x.m <= p.t; }
inline bool r_i(const P& p, const X& x) { return x.i < p.s; }
inline bool r_ik(const P& p, const X& x) { return x.i < x.k && x.k < p.s; }
inline bool r_ii2jj2(const P& p, const X& x) { return x.i < x.i2 && x.i2 < p.s && x.j < x.j2 && x.j2 <= p.t; }
inline bool r_ii2j2j(const P& p, const X& x) { return x.i < x.i2 && x.i2 < p.s && x.j2 < x.j && x.j <= p.t; }
inline bool r_ijj2(const P& p, const X& x) { return x.i < p.s && x.j < x.j2 && x.j2 <= p.t; }
inline bool r_ijj2_odd(const P& p, const X& x) { return r_ijj2(p, x) && odd(x.j2, x.j); }
inline bool r_ijj2_even(const P& p, const X& x) { return r_ijj2(p, x) && !odd(x.j2, x.j); }
inline bool r_ijj2k(const P& p, const X& x) { return r_ijj2(p, x) && x.i < x.k && x.k < p.s; }
inline bool r_ijj2k_odd(const P& p, const X& x) { return r_ijj2k(p, x) && odd(x.j2, x.j); }
inline bool r_ijj2k_even(const P& p, const X& x) { return r_ijj2k(p, x) && !odd(x.j2, x.j); }
inline bool r_sjj2(const P& p, const X& x) { return x.j < x.j2 && x.j2 <= p.t; }
inline bool r_ij2j(const P& p, const X& x) { return x.i < p.s && x.j2 < x.j && x.j <= p.t; }
inline bool r_ii2j(const P& p, const X& x) { return x.i < x.i2 && x.i2 < p.s && x.j < p.t; }
inline bool r_ii2jm(const P& p, const X& x) { return r_ii2j(p, x) && x.j < x.m && x.m <= p.t; }
inline bool r_ii2jm_odd(const P& p, const X& x) { return r_ii2jm(p, x) && odd(x.m, x.j); }
inline bool r_ii2jm_even(const P& p, const X& x) { return r_ii2jm(p, x) && !odd(x.m, x.j); }

/// Calls visit for every index tuple with the unused indices held at zero.
inline void enumerate_indices(const P& p, unsigned uses, const auto& visit) {
  namespace b = index_bits;
  X x;
  const unsigned si = uses & b::i ? p.s : 0, si2 = uses & b::i2 ? p.s : 0, sk = uses & b::k ? p.s : 0;
  const unsigned tj = uses & b::j ? p.t : 0, tj2 = uses & b::j2 ? p.t : 0, tm = uses & b::m ? p.t : 0;
  for (x.i = 0; x.i <= si; ++x.i)
    for (x.i2 = 0; x.i2 <= si2; ++x.i2)
      for (x.k = 0; x.k <= sk; ++x.k)
        for (x.j = 0; x.j <= tj; ++x.j)
          for (x.j2 = 0; x.j2 <= tj2; ++x.j2)
            for (x.m = 0; x.m <= tm; ++x.m) visit(x);
}

}  // namespace mcc::rules
