#include <gtest/gtest.h>

#include "mcc/codes.hpp"
#include "support.hpp"

using namespace mcc;

namespace {

struct Fixture {
  Parameters params;
  CosetSystem system;
  gf::SplittingField field;

  explicit Fixture(const Parameters& p)
      : params(p), system(enumerate_cosets(p)), field(gf::build_splitting_field(p)) {}
};

// Every message encoded directly; returns {min weight, min odd-like weight}.
std::pair<u64, u64> naive_weights(const CodeSpec& code, u64 period) {
  u64 total = 1;
  for (u64 k = 0; k < code.dimension; ++k) total *= code.l;
  u64 best = ~u64{0}, best_odd = ~u64{0};
  for (u64 c = 1; c < total; ++c) {
    gf::Poly message(code.dimension, 0);
    u64 rest = c;
    for (auto& digit : message) {
      digit = rest % code.l;
      rest /= code.l;
    }
    gf::poly::trim(message);
    const RingElement word = encode(code, message);
    best = std::min<u64>(best, word.weight());
    if (period && is_odd_like(word, period)) best_odd = std::min<u64>(best_odd, word.weight());
  }
  return {best, best_odd};
}

}  // namespace

TEST(Codes, MinimalCodeDimensionsAndGenerators) {
  for (const auto& t : test::kTuples) {
    Fixture fx(test::params_of(t));
    u64 total = 0;
    for (const auto& label : all_labels(fx.params)) {
      const CodeSpec code = minimal_code(fx.system, fx.field, label);
      EXPECT_NO_THROW(validate_code(code));
      EXPECT_EQ(code.dimension, fx.system.coset(label).size());
      total += code.dimension;
    }
    EXPECT_EQ(total, fx.params.n);
  }
}

TEST(Codes, ValidateRejectsBadSpecs) {
  CodeSpec bad{7, 2, {1, 1}, 6, std::nullopt};
  EXPECT_NO_THROW(validate_code(bad));
  bad.dimension = 5;
  EXPECT_THROW(validate_code(bad), std::invalid_argument);
  CodeSpec non_divisor{7, 2, {1, 0, 1}, 5, std::nullopt};  // 1 + x^2 = (1 + x)^2
  EXPECT_THROW(validate_code(non_divisor), std::invalid_argument);
}

TEST(Codes, GrayEnumerationMatchesDirectEncoding) {
  for (const auto& t : test::kTuples) {
    Fixture fx(test::params_of(t));
    for (const auto& label : all_labels(fx.params)) {
      const CodeSpec code = minimal_code(fx.system, fx.field, label);
      if (codeword_count(code) > 20000) continue;
      const u64 period = fx.params.pow_q(fx.params.t);
      const auto [best, best_odd] = naive_weights(code, period);
      for (unsigned threads : {1u, 3u}) {
        const WeightSearch search = exhaustive_weights(code, period, kDefaultBudget, threads);
        EXPECT_EQ(search.min_weight, best) << to_string(label);
        EXPECT_EQ(search.codewords + 1, static_cast<u64>(codeword_count(code)));
        if (best_odd == ~u64{0}) {
          EXPECT_FALSE(search.min_odd_like_weight);
        } else {
          EXPECT_EQ(search.min_odd_like_weight.value_or(0), best_odd);
        }
      }
    }
  }
}

TEST(Codes, ShardCountDoesNotChangeTheResult) {
  Fixture fx(validate_parameters(7, 5, 1, 1, 2, 3));
  const DuadicCode dc = duadic_code(fx.system, fx.field, SelectionMatrix(1, 2, {1, 0}));
  const auto one = exhaustive_weights(dc.inner, dc.period, kDefaultBudget, 1);
  const auto many = exhaustive_weights(dc.inner, dc.period, kDefaultBudget, 7);
  EXPECT_EQ(one.min_weight, many.min_weight);
  EXPECT_EQ(one.min_odd_like_weight, many.min_odd_like_weight);
  EXPECT_EQ(one.odd_like_codewords, many.odd_like_codewords);
  EXPECT_EQ(one.codewords, (u64{1} << 20) - 1);
}

TEST(Codes, TopLevelDistancesAreExact) {
  // (11,5,1,1,3), j = 0: 3^4 - 1 = 80 nonzero words, distance 2 * 11.
  Fixture a(validate_parameters(11, 5, 1, 1, 3, 2));
  const CodeSpec ca = minimal_code(a.system, a.field, {1, 0, false});
  EXPECT_EQ(exhaustive_weights(ca, 0).codewords, 80u);
  EXPECT_EQ(min_distance_exhaustive(ca), 22u);
  ASSERT_TRUE(ca.distance);
  EXPECT_EQ(ca.distance->value, 22u);
  EXPECT_EQ(ca.distance->kind, DistanceKind::exact);

  Fixture b(validate_parameters(7, 5, 1, 1, 2, 3));
  const CodeSpec cb = minimal_code(b.system, b.field, {1, 0, false});
  EXPECT_EQ(exhaustive_weights(cb, 0).codewords, 15u);
  EXPECT_EQ(min_distance_exhaustive(cb), 14u);

  for (const auto& t : test::kTuples) {
    Fixture fx(test::params_of(t));
    for (unsigned j = 0; j <= fx.params.t; ++j) {
      const CodeSpec code = minimal_code(fx.system, fx.field, {fx.params.s, j, false});
      if (codeword_count(code) > kDefaultBudget) continue;
      const u64 expected = j == fx.params.t ? fx.params.n : 2 * fx.params.pow_p(fx.params.s) * fx.params.pow_q(j);
      EXPECT_EQ(min_distance_exhaustive(code), expected);
      EXPECT_EQ(code.distance->value, expected);
    }
  }
}

TEST(Codes, TopLevelMinimalPolynomialShape) {
  // M_{p^s q^j} = 1 + x^{q^{t-j-1}} + ... + x^{(q-1) q^{t-j-1}}.
  for (const auto& t : test::kTuples) {
    Fixture fx(test::params_of(t));
    for (unsigned j = 0; j < fx.params.t; ++j) {
      const u64 step = fx.params.pow_q(fx.params.t - j - 1);
      gf::Poly expected((fx.params.q - 1) * step + 1, 0);
      for (u64 k = 0; k < fx.params.q; ++k) expected[k * step] = 1;
      EXPECT_EQ(minimal_polynomial(fx.system, fx.field, {fx.params.s, j, false}).poly, expected);
    }
  }
}

TEST(Codes, RepetitionDecomposition) {
  for (const auto& t : test::kTuples) {
    Fixture fx(test::params_of(t));
    for (unsigned j = 0; j < fx.params.t; ++j) {
      const auto rd = repetition_decomposition(fx.system, fx.field, j);
      EXPECT_EQ(rd.factor * rd.inner.n, fx.params.n);
      if (codeword_count(rd.inner) <= kDefaultBudget) EXPECT_EQ(min_distance_exhaustive(rd.inner), 2u);
      EXPECT_EQ(rd.inner.dimension, minimal_code(fx.system, fx.field, {fx.params.s, j, false}).dimension);
    }
    EXPECT_THROW(repetition_decomposition(fx.system, fx.field, fx.params.t), std::out_of_range);
  }
}

TEST(Codes, BudgetExceededCarriesTheCount) {
  Fixture fx(validate_parameters(11, 5, 1, 1, 3, 2));
  const CodeSpec code = minimal_code(fx.system, fx.field, {0, 0, false});
  try {
    min_distance_exhaustive(code, 1000);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.needed(), gf::BigInt(3486784401ULL));  // 3^20
    EXPECT_EQ(e.budget(), 1000u);
  }
}

TEST(Codes, SelectionCodesOn_7_5_1_1_2) {
  // Dimension (p^s + 1) q^t / 2 = 20, odd-like weight at least ceil(sqrt 7) = 3.
  Fixture fx(validate_parameters(7, 5, 1, 1, 2, 3));
  const auto all = SelectionMatrix::all(1, 2);
  ASSERT_EQ(all.size(), 4u);
  for (const auto& a : all) {
    const DuadicCode dc = duadic_code(fx.system, fx.field, a);
    EXPECT_EQ(dc.code.dimension, 20u);
    EXPECT_EQ(dc.repetition, 1u);
    const OddLikeResult r = odd_like_min_weight(dc);
    EXPECT_TRUE(r.exact);
    EXPECT_EQ(r.examined, (u64{1} << 20) - 1);
    EXPECT_GE(r.min_weight, 3u);
    EXPECT_TRUE(r.bound_holds());
    EXPECT_EQ(r.verdict, "exact");
  }
}

TEST(Codes, SelectionCodeFromComplementSwapsTheHalves) {
  Fixture fx(validate_parameters(7, 5, 1, 1, 2, 3));
  const SelectionMatrix a(1, 2, {1, 0});
  const DuadicCode x = duadic_code(fx.system, fx.field, a);
  const DuadicCode y = duadic_code(fx.system, fx.field, a.complement());
  const gf::PrimeField f(2);
  // g_A g_A' times the top-level factors is x^n - 1.
  gf::Poly top{1};
  for (unsigned m = 0; m <= fx.params.t; ++m) {
    top = gf::poly::mul(f, top, minimal_polynomial(fx.system, fx.field, {fx.params.s, m, false}).poly);
  }
  EXPECT_EQ(gf::poly::mul(f, gf::poly::mul(f, x.code.generator, y.code.generator), top),
            gf::poly::x_pow_minus_one(f, fx.params.n));
}

TEST(Codes, AnchoredSelectionCodes) {
  Fixture fx(validate_parameters(7, 5, 2, 1, 2));
  for (const Anchor anchor : {Anchor{1, 0}, Anchor{1, 1}, Anchor{0, 1}}) {
    const unsigned rows = fx.params.s - anchor.i, cols = fx.params.t + 1 - anchor.j;
    const u64 inner_len = fx.params.pow_p(fx.params.s - anchor.i) * fx.params.pow_q(fx.params.t - anchor.j);
    const u64 copies = fx.params.pow_p(anchor.i) * fx.params.pow_q(anchor.j);
    for (const auto& a : SelectionMatrix::all(rows, cols)) {
      const DuadicCode dc = duadic_code(fx.system, fx.field, a, anchor);
      EXPECT_EQ(dc.inner.n, inner_len);
      EXPECT_EQ(dc.repetition, copies);
      EXPECT_EQ(dc.code.dimension,
                (fx.params.pow_p(fx.params.s - anchor.i) + 1) * fx.params.pow_q(fx.params.t - anchor.j) / 2);
      EXPECT_EQ(dc.code.dimension, dc.inner.dimension);
      const OddLikeResult r = odd_like_min_weight(dc, kDefaultBudget, 256);
      EXPECT_TRUE(r.bound_holds()) << r.min_weight << " < " << r.bound;
      if (r.exact) {
        // The full code is the inner code repeated, so its odd-like minimum scales.
        EXPECT_EQ(r.min_weight, copies * r.inner_min);
      }
    }
  }
  EXPECT_THROW(duadic_code(fx.system, fx.field, SelectionMatrix(1, 2), Anchor{0, 0}), std::invalid_argument);
  EXPECT_THROW(duadic_code(fx.system, fx.field, SelectionMatrix(1, 1), Anchor{2, 0}), std::out_of_range);
}

TEST(Codes, SquareRootProductsArePeriodic) {
  for (const auto& t : test::kTuples) {
    Fixture fx(test::params_of(t));
    for (const auto& a : SelectionMatrix::all(fx.params.s, fx.params.t + 1)) {
      const DuadicCode dc = duadic_code(fx.system, fx.field, a);
      const SquareRootCheck check = check_square_root_products(dc, 24);
      EXPECT_GT(check.odd_like_words, 0u);
      EXPECT_TRUE(check.ok());
    }
  }
}

TEST(Codes, SamplingFallbackIsLabelledAsBound) {
  Fixture fx(validate_parameters(7, 5, 1, 1, 2, 3));
  const DuadicCode dc = duadic_code(fx.system, fx.field, SelectionMatrix(1, 2, {0, 1}));
  const OddLikeResult r = odd_like_min_weight(dc, 1000, 500);
  EXPECT_FALSE(r.exact);
  EXPECT_EQ(r.examined, 500u);
  EXPECT_EQ(r.verdict, "bound-consistent");
  const OddLikeResult again = odd_like_min_weight(dc, 1000, 500);
  EXPECT_EQ(r.min_weight, again.min_weight);
}

TEST(Codes, OddLikeFold) {
  const RingElement a(10, 3, {1, 0, 0, 0, 0, 2, 0, 0, 0, 0});
  EXPECT_FALSE(is_odd_like(a, 5));
  EXPECT_TRUE(is_odd_like(a, 2));
  EXPECT_THROW(is_odd_like(a, 3), std::invalid_argument);
}

TEST(Codes, SelectionMatrixShape) {
  EXPECT_THROW(SelectionMatrix(2, 2, {1, 0, 1}), std::invalid_argument);
  SelectionMatrix m(2, 3);
  m.set(1, 2, true);
  EXPECT_TRUE(m.at(1, 2));
  EXPECT_FALSE(m.complement().at(1, 2));
  EXPECT_EQ(SelectionMatrix::all(2, 2).size(), 16u);
}
