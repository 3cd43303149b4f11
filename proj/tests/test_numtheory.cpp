#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "mcc/numtheory.hpp"
#include "support.hpp"

using namespace mcc;

namespace {

bool trial_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

u64 brute_order(u64 a, u64 m) {
  u64 x = a % m, k = 1;
  while (x != 1) {
    x = x * a % m;
    ++k;
  }
  return k;
}

}  // namespace

TEST(Primes, MatchesTrialDivision) {
  for (u64 n = 0; n < 5000; ++n) EXPECT_EQ(is_prime(n), trial_prime(n)) << n;
  EXPECT_TRUE(is_prime(1'000'000'007ULL));
  EXPECT_TRUE(is_prime(18'446'744'073'709'551'557ULL));
  EXPECT_FALSE(is_prime(3'215'031'751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(Arithmetic, PowmodMatchesRepeatedProducts) {
  for (u64 m : {2ULL, 7ULL, 35ULL, 97ULL}) {
    for (u64 a = 0; a < 20; ++a) {
      u64 acc = 1 % m;
      for (u64 e = 0; e < 30; ++e) {
        EXPECT_EQ(powmod(a, e, m), acc);
        acc = acc * a % m;
      }
    }
  }
  EXPECT_EQ(mulmod(~u64{0}, ~u64{0}, 1'000'000'007ULL), 114'944'269ULL);
}

TEST(Arithmetic, IpowOverflowThrows) {
  EXPECT_EQ(ipow(7, 2), 49u);
  EXPECT_EQ(ipow(5, 0), 1u);
  EXPECT_THROW(ipow(10, 20), std::overflow_error);
}

TEST(Arithmetic, PhiMatchesGcdCount) {
  for (u64 n = 1; n < 400; ++n) {
    u64 count = 0;
    for (u64 k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
    EXPECT_EQ(euler_phi(n), count) << n;
  }
}

TEST(Arithmetic, PrimeFactors) {
  EXPECT_EQ(prime_factors(360), (std::vector<u64>{2, 3, 5}));
  EXPECT_EQ(prime_factors(97), (std::vector<u64>{97}));
  EXPECT_TRUE(prime_factors(1).empty());
}

TEST(Arithmetic, OrderMatchesBruteForce) {
  for (u64 m : {7ULL, 35ULL, 49ULL, 55ULL, 75ULL, 121ULL}) {
    for (u64 a = 1; a < m; ++a) {
      if (std::gcd(a, m) != 1) {
        EXPECT_THROW(mult_order(a, m), std::invalid_argument);
        continue;
      }
      EXPECT_EQ(mult_order(a, m), brute_order(a, m));
    }
  }
}

TEST(Arithmetic, PrimitiveRoots) {
  for (u64 p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 23ULL}) {
    for (unsigned k = 1; k <= 3; ++k) {
      const u64 m = ipow(p, k);
      const u64 g = find_primitive_root(p, k);
      EXPECT_EQ(brute_order(g, m), euler_phi(m));
      EXPECT_TRUE(is_primitive_root(g, m));
      for (u64 smaller = 2; smaller < g; ++smaller) {
        if (std::gcd(smaller, m) == 1) EXPECT_LT(brute_order(smaller, m), euler_phi(m));
      }
    }
  }
}

TEST(Arithmetic, CrtSolvesBothCongruences) {
  for (u64 r1 = 0; r1 < 7; ++r1) {
    for (u64 r2 = 0; r2 < 25; ++r2) {
      const u64 x = crt_solve(r1, 7, r2, 25);
      EXPECT_LT(x, 175u);
      EXPECT_EQ(x % 7, r1);
      EXPECT_EQ(x % 25, r2);
    }
  }
}

TEST(Arithmetic, LegendreMatchesSquares) {
  for (u64 p : {3ULL, 7ULL, 11ULL, 19ULL, 23ULL}) {
    std::set<u64> squares;
    for (u64 x = 1; x < p; ++x) squares.insert(x * x % p);
    EXPECT_EQ(legendre(0, p), 0);
    for (u64 a = 1; a < p; ++a) EXPECT_EQ(legendre(a, p), squares.count(a) ? 1 : -1);
  }
}

TEST(Arithmetic, ResidueSetsAreSquaresOfUnits) {
  for (u64 p : {3ULL, 7ULL, 11ULL}) {
    for (unsigned k = 1; k <= 2; ++k) {
      const u64 m = ipow(p, k);
      std::set<u64> squares;
      for (u64 x = 1; x < m; ++x) {
        if (x % p) squares.insert(x * x % m);
      }
      const QRSets sets = quadratic_residue_sets(p, k);
      EXPECT_EQ(std::set<u64>(sets.residues.begin(), sets.residues.end()), squares);
      EXPECT_EQ(sets.residues.size() + sets.nonresidues.size(), euler_phi(m));
      for (u64 r : sets.nonresidues) EXPECT_FALSE(squares.count(r));
    }
  }
}

TEST(Hypotheses, AcceptsReferenceTuples) {
  for (const auto& t : test::kTuples) EXPECT_NO_THROW(test::params_of(t));
  const Parameters a = validate_parameters(11, 5, 1, 1, 3, 2);
  EXPECT_EQ(a.n, 55u);
  EXPECT_EQ(a.g, 2u);
  EXPECT_TRUE(a.qr_case);  // 4^2 = 5 mod 11
  const Parameters b = validate_parameters(7, 5, 1, 1, 2, 3);
  EXPECT_EQ(b.n, 35u);
  EXPECT_FALSE(b.qr_case);
}

TEST(Hypotheses, DefaultRootComesFromCrt) {
  // 3 generates Z*_7 and 2 generates Z*_5; x = 3 mod 7, x = 2 mod 5 gives 17.
  const Parameters params = validate_parameters(7, 5, 1, 1, 2);
  EXPECT_EQ(params.g, 17u);
  EXPECT_EQ(params.v % 7, 1u);
  EXPECT_EQ(params.v % 5, params.g % 5);
}

TEST(Hypotheses, ReportsTheViolatedCondition) {
  auto which = [](auto&& call) {
    try {
      call();
    } catch (const HypothesisError& e) {
      return e.which();
    }
    ADD_FAILURE() << "expected a hypothesis violation";
    return Hypothesis::too_large;
  };
  EXPECT_EQ(which([] { validate_parameters(7, 5, 1, 1, 3); }), Hypothesis::order_mod_ps);
  EXPECT_EQ(which([] { validate_parameters(5, 7, 1, 1, 2); }), Hypothesis::p_not_3_mod_4);
  EXPECT_EQ(which([] { validate_parameters(7, 7, 1, 1, 2); }), Hypothesis::not_distinct);
  EXPECT_EQ(which([] { validate_parameters(7, 9, 1, 1, 2); }), Hypothesis::not_prime);
  EXPECT_EQ(which([] { validate_parameters(7, 5, 0, 1, 2); }), Hypothesis::bad_exponent);
  EXPECT_EQ(which([] { validate_parameters(7, 13, 1, 1, 2); }), Hypothesis::gcd_not_two);
  EXPECT_EQ(which([] { validate_parameters(7, 5, 1, 1, 2, 2); }), Hypothesis::bad_common_root);
  EXPECT_EQ(which([] { validate_parameters(7, 5, 30, 1, 2); }), Hypothesis::too_large);

  try {
    validate_parameters(7, 5, 1, 1, 3);
  } catch (const HypothesisError& e) {
    EXPECT_NE(std::string(e.what()).find("ord_{p^s}(l) ≠ φ(p^s)/2"), std::string::npos);
  }
}

TEST(Hypotheses, AcceptedTuplesSatisfyEveryConditionByBruteForce) {
  const auto tuples = test::small_tuples(3000, 30);
  ASSERT_GT(tuples.size(), 20u);
  for (const auto& params : tuples) {
    const u64 ps = params.pow_p(params.s), qt = params.pow_q(params.t);
    EXPECT_EQ(params.p % 4, 3u);
    EXPECT_EQ(std::gcd(euler_phi(ps), euler_phi(qt)), 2u);
    EXPECT_EQ(brute_order(params.l, ps), euler_phi(ps) / 2);
    EXPECT_EQ(brute_order(params.l, qt), euler_phi(qt));
    EXPECT_EQ(brute_order(params.l, params.n), euler_phi(params.n) / 2);
    EXPECT_EQ(brute_order(params.g % ps, ps), euler_phi(ps));
    EXPECT_EQ(brute_order(params.g % qt, qt), euler_phi(qt));
  }
}
