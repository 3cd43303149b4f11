#include <gtest/gtest.h>

#include <random>
#include <set>

#include "mcc/gf.hpp"
#include "support.hpp"

using namespace mcc;
using gf::Poly;

namespace {

Poly random_poly(std::mt19937_64& rng, u64 l, unsigned max_degree) {
  std::uniform_int_distribution<u64> digit(0, l - 1);
  Poly a(max_degree + 1);
  for (auto& c : a) c = digit(rng);
  gf::poly::trim(a);
  return a;
}

// Every monic polynomial of degree d over F_l, by counting in base l.
std::vector<Poly> monic_of_degree(u64 l, unsigned d) {
  std::vector<Poly> out;
  u64 total = 1;
  for (unsigned k = 0; k < d; ++k) total *= l;
  for (u64 c = 0; c < total; ++c) {
    Poly a(d + 1, 0);
    u64 rest = c;
    for (unsigned k = 0; k < d; ++k, rest /= l) a[k] = rest % l;
    a[d] = 1;
    out.push_back(a);
  }
  return out;
}

bool irreducible_by_trial_division(const gf::PrimeField& f, const Poly& a) {
  const long deg = gf::poly::degree(a);
  for (unsigned d = 1; 2 * d <= deg; ++d) {
    for (const auto& b : monic_of_degree(f.order(), d)) {
      if (gf::poly::mod(f, a, b).empty()) return false;
    }
  }
  return true;
}

}  // namespace

TEST(PrimeField, InversesAndNegatives) {
  for (u64 l : {2ULL, 3ULL, 13ULL, 101ULL}) {
    const gf::PrimeField f(l);
    for (u64 a = 1; a < l; ++a) {
      EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
      EXPECT_EQ(f.add(a, f.neg(a)), 0u);
    }
    EXPECT_THROW(f.inv(0), std::domain_error);
    EXPECT_EQ(f.from_int(-1), l - 1);
  }
}

TEST(Poly, DivisionIdentity) {
  std::mt19937_64 rng(7);
  for (u64 l : {2ULL, 3ULL, 13ULL}) {
    const gf::PrimeField f(l);
    for (int trial = 0; trial < 200; ++trial) {
      const Poly a = random_poly(rng, l, 12);
      Poly b = random_poly(rng, l, 5);
      if (b.empty()) continue;
      const auto [quot, rem] = gf::poly::divmod(f, a, b);
      EXPECT_LT(gf::poly::degree(rem), gf::poly::degree(b));
      EXPECT_EQ(gf::poly::add(f, gf::poly::mul(f, quot, b), rem), a);
    }
  }
}

TEST(Poly, GcdDividesBoth) {
  std::mt19937_64 rng(11);
  const gf::PrimeField f(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Poly common = random_poly(rng, 3, 3);
    if (common.empty()) continue;
    const Poly a = gf::poly::mul(f, common, random_poly(rng, 3, 4));
    const Poly b = gf::poly::mul(f, common, random_poly(rng, 3, 4));
    if (a.empty() || b.empty()) continue;
    const Poly g = gf::poly::gcd(f, a, b);
    EXPECT_EQ(g.back(), 1u);
    EXPECT_TRUE(gf::poly::mod(f, a, g).empty());
    EXPECT_TRUE(gf::poly::mod(f, b, g).empty());
    EXPECT_TRUE(gf::poly::mod(f, g, common).empty());
  }
}

TEST(Poly, XPowMinusOne) {
  const gf::PrimeField f(5);
  const Poly a = gf::poly::x_pow_minus_one(f, 4);
  EXPECT_EQ(a, (Poly{4, 0, 0, 0, 1}));
}

TEST(Poly, IrreducibilityMatchesTrialDivision) {
  for (u64 l : {2ULL, 3ULL}) {
    const gf::PrimeField f(l);
    for (unsigned d = 1; d <= (l == 2 ? 7u : 5u); ++d) {
      for (const auto& a : monic_of_degree(l, d)) {
        EXPECT_EQ(gf::poly::is_irreducible(f, a), irreducible_by_trial_division(f, a)) << l << " " << d;
      }
    }
  }
}

TEST(Poly, FindIrreducibleIsSmallestMonic) {
  for (u64 l : {2ULL, 3ULL, 5ULL}) {
    const gf::PrimeField f(l);
    for (unsigned d = 1; d <= 5; ++d) {
      const Poly a = gf::find_irreducible(l, d);
      ASSERT_EQ(gf::poly::degree(a), static_cast<long>(d));
      for (const auto& candidate : monic_of_degree(l, d)) {
        if (irreducible_by_trial_division(f, candidate)) {
          EXPECT_EQ(a, candidate);
          break;
        }
      }
    }
  }
  // Large degrees must not stall on candidates divisible by x.
  EXPECT_EQ(gf::poly::degree(gf::find_irreducible(3, 20)), 20);
}

TEST(ExtField, RingAxiomsAndFermat) {
  std::mt19937_64 rng(3);
  const gf::ExtField ext(3, 4);
  auto random_element = [&] {
    gf::ExtElement e;
    std::uniform_int_distribution<u64> digit(0, 2);
    for (unsigned k = 0; k < ext.degree(); ++k) e.coeffs.push_back(digit(rng));
    return e;
  };
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_element(), b = random_element(), c = random_element();
    EXPECT_EQ(ext.mul(a, ext.mul(b, c)), ext.mul(ext.mul(a, b), c));
    EXPECT_EQ(ext.mul(a, ext.add(b, c)), ext.add(ext.mul(a, b), ext.mul(a, c)));
    EXPECT_EQ(ext.add(a, ext.neg(a)), ext.zero());
    if (!ext.is_zero(a)) EXPECT_EQ(ext.pow(a, 80), ext.one());  // 3^4 - 1
    auto d = a;
    ext.add_scaled(d, b, 2);
    EXPECT_EQ(d, ext.add(a, ext.scale(b, 2)));
  }
  EXPECT_TRUE(ext.is_scalar(ext.scalar(2)));
  EXPECT_EQ(ext.scalar_value(ext.scalar(2)), 2u);
  EXPECT_THROW(ext.scalar_value(ext.from_index(3)), gf::VerificationError);
}

TEST(SplittingField, AlphaHasExactOrderN) {
  for (const auto& t : test::kTuples) {
    const Parameters params = test::params_of(t);
    const auto field = gf::build_splitting_field(params);
    const auto& ext = field.field;
    EXPECT_EQ(ext.degree(), mult_order(params.l, params.n));
    EXPECT_EQ(ext.pow(field.gauss.alpha, params.n), ext.one());
    for (u64 r : prime_factors(params.n)) EXPECT_NE(ext.pow(field.gauss.alpha, params.n / r), ext.one());
    EXPECT_EQ(field.alpha_pow(params.n + 1), field.gauss.alpha);
  }
}

TEST(SplittingField, GaussSumRelations) {
  for (const auto& t : test::kTuples) {
    const Parameters params = test::params_of(t);
    const gf::PrimeField f(params.l);
    for (unsigned index = 0; index < 3; ++index) {
      const auto g = gf::build_splitting_field(params, index).gauss;
      EXPECT_EQ(f.add(g.residue_sum, g.nonresidue_sum), f.neg(1));
      EXPECT_EQ(f.mul(g.residue_sum, g.nonresidue_sum), (params.p + 1) / 4 % params.l);
      if (params.l != 2) {
        EXPECT_EQ(f.mul(g.delta, g.delta), f.neg(params.p % params.l));
        EXPECT_EQ(g.delta, f.add(f.mul(2, g.residue_sum), 1));
      }
    }
  }
}

TEST(SplittingField, AlphaIndexReachesBothGaussOrbits) {
  // (11,5,1,1,3) needs R = 2, N = 0; (7,5,1,1,2) needs R = 1, N = 0.
  const Parameters a = validate_parameters(11, 5, 1, 1, 3, 2);
  std::set<std::pair<u64, u64>> seen_a;
  for (unsigned k = 0; k < 4; ++k) {
    const auto g = gf::build_splitting_field(a, k).gauss;
    seen_a.insert({g.residue_sum, g.nonresidue_sum});
  }
  EXPECT_TRUE(seen_a.count({2, 0}));
  EXPECT_TRUE(seen_a.count({0, 2}));
  EXPECT_EQ(gf::build_splitting_field(a, 0).gauss.residue_sum, 2u);

  const Parameters b = validate_parameters(7, 5, 1, 1, 2, 3);
  std::set<std::pair<u64, u64>> seen_b;
  for (unsigned k = 0; k < 4; ++k) {
    const auto g = gf::build_splitting_field(b, k).gauss;
    seen_b.insert({g.residue_sum, g.nonresidue_sum});
  }
  EXPECT_TRUE(seen_b.count({1, 0}));
  EXPECT_TRUE(seen_b.count({0, 1}));
}

TEST(SplittingField, AlphaIndexGivesDistinctRoots) {
  const Parameters params = validate_parameters(7, 5, 1, 1, 2, 3);
  const gf::ExtField ext(2, gf::find_irreducible(2, static_cast<unsigned>(mult_order(2, 35))));
  std::set<gf::ExtElement> roots;
  for (unsigned k = 0; k < 5; ++k) roots.insert(gf::primitive_nth_root(params, ext, k));
  EXPECT_EQ(roots.size(), 5u);
}
