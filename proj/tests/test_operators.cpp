#include <gtest/gtest.h>

#include "support.hpp"

namespace mzlab {
namespace {

using testing::Rng;

const Field Q = Field::rationals();

Derivation<LaurentPoly> random_derivation(Rng& rng, const RingContext& ctx) {
  std::vector<LaurentPoly> c;
  for (std::size_t i = 0; i < ctx.nvars; ++i) c.push_back(testing::random_laurent(rng, ctx, 3, -2, 2));
  return Derivation<LaurentPoly>(c);
}

Endomorphism<LaurentPoly> random_endomorphism(Rng& rng, const RingContext& ctx) {
  std::vector<LaurentPoly> imgs;
  for (std::size_t i = 0; i < ctx.nvars; ++i) imgs.push_back(testing::random_poly(rng, ctx, 3, 2));
  return Endomorphism<LaurentPoly>(imgs);
}

Endomorphism<TruncSeries> random_series_endomorphism(Rng& rng, const RingContext& ctx, std::int64_t order) {
  std::vector<TruncSeries> imgs;
  for (std::size_t i = 0; i < ctx.nvars; ++i) imgs.push_back(testing::random_series(rng, ctx, order, 4, false, true));
  return Endomorphism<TruncSeries>(imgs);
}

TEST(DerivationTest, LeibnizOnLaurent) {
  Rng rng(31);
  for (std::size_t n = 1; n <= 3; ++n) {
    const RingContext ctx{n, Q};
    for (int k = 0; k < 150; ++k) {
      const auto d = random_derivation(rng, ctx);
      const auto f = testing::random_laurent(rng, ctx, 4, -3, 3);
      const auto g = testing::random_laurent(rng, ctx, 4, -3, 3);
      ASSERT_EQ(apply_derivation(d, f * g), apply_derivation(d, f) * g + f * apply_derivation(d, g));
      ASSERT_TRUE(apply_derivation(d, LaurentPoly::constant(ctx, 7)).is_zero());
    }
  }
}

TEST(DerivationTest, LeibnizOnSeriesRespectsPrecision) {
  Rng rng(32);
  const RingContext ctx{2, Q};
  for (int k = 0; k < 100; ++k) {
    std::vector<TruncSeries> c{testing::random_series(rng, ctx, 6, 4), testing::random_series(rng, ctx, 6, 4)};
    const Derivation<TruncSeries> d(c);
    const auto f = testing::random_series(rng, ctx, 8, 5);
    const auto g = testing::random_series(rng, ctx, 8, 5);
    const auto lhs = d.apply(mul_valid(f, g));
    const auto rhs = mul_valid(d.apply(f), g) + mul_valid(f, d.apply(g));
    ASSERT_TRUE(same_element(lhs, rhs));
    ASSERT_LE(lhs.order(), mul_valid(f, g).order());
  }
}

TEST(DerivationTest, PowerLeibnizUpToEight) {
  Rng rng(33);
  const RingContext ctx{2, Q};
  for (int k = 0; k < 40; ++k) {
    const auto d = random_derivation(rng, ctx);
    const auto a = testing::random_poly(rng, ctx, 3, 3);
    const auto b = testing::random_poly(rng, ctx, 3, 3);
    for (std::size_t n = 1; n <= 8; ++n) ASSERT_TRUE(leibniz_power_check(d, a, b, n));
  }
  EXPECT_THROW(leibniz_power_check(random_derivation(rng, ctx), LaurentPoly(ctx), LaurentPoly(ctx), 0), InputError);
}

TEST(DerivationTest, DiagonalActsOnMonomials) {
  const RingContext ctx{2, Q};
  const auto d = Derivation<LaurentPoly>::diagonal(ctx, {Q(2), Q(3)});
  const auto m = LaurentPoly::monomial(ctx, MultiIndex({4, -1}));
  EXPECT_EQ(d.apply(m), m * Q(5));
  EXPECT_EQ(d.to_string(), "D(x1)=2*x1, D(x2)=3*x2");
}

TEST(EndomorphismTest, Multiplicative) {
  Rng rng(34);
  for (std::size_t n = 1; n <= 3; ++n) {
    const RingContext ctx{n, Q};
    for (int k = 0; k < 100; ++k) {
      const auto phi = random_endomorphism(rng, ctx);
      const auto f = testing::random_poly(rng, ctx, 4, 3);
      const auto g = testing::random_poly(rng, ctx, 4, 3);
      ASSERT_EQ(apply_endomorphism(phi, f * g), phi.apply(f) * phi.apply(g));
      ASSERT_EQ(phi.apply(LaurentPoly::constant(ctx, 1)), LaurentPoly::constant(ctx, 1));
    }
  }
}

TEST(EndomorphismTest, MultiplicativeOnSeries) {
  Rng rng(35);
  const RingContext ctx{2, Q};
  for (int k = 0; k < 60; ++k) {
    const auto phi = random_series_endomorphism(rng, ctx, 6);
    const auto f = testing::random_series(rng, ctx, 6, 5);
    const auto g = testing::random_series(rng, ctx, 6, 5);
    ASSERT_TRUE(same_element(phi.apply(f * g), phi.apply(f) * phi.apply(g)));
  }
}

TEST(EndomorphismTest, LaurentNeedsUnitImagesForNegativeExponents) {
  const RingContext ctx{1, Q};
  const auto x = LaurentPoly::variable(ctx, 0);
  const Endomorphism<LaurentPoly> phi({x + LaurentPoly::constant(ctx, 1)});
  EXPECT_THROW(phi.apply(x.pow(-1)), InputError);
  const Endomorphism<LaurentPoly> scale({x * Q(2)});
  EXPECT_EQ(scale.apply(x.pow(-2)), x.pow(-2) * Q.parse("1/4"));
}

TEST(EndomorphismTest, SeriesImagesMustVanishAtZero) {
  const RingContext ctx{1, Q};
  const auto x = TruncSeries::variable(ctx, 4, 0);
  try {
    Endomorphism<TruncSeries>({x + TruncSeries::one(ctx, 4)});
    FAIL() << "expected rejection";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("inverse"), std::string::npos);
  }
}

TEST(EDerivationTest, TwistedLeibniz) {
  Rng rng(36);
  for (std::size_t n = 1; n <= 3; ++n) {
    const RingContext ctx{n, Q};
    for (int k = 0; k < 100; ++k) {
      const EDerivation<LaurentPoly> delta(random_endomorphism(rng, ctx));
      const auto f = testing::random_poly(rng, ctx, 4, 3);
      const auto g = testing::random_poly(rng, ctx, 4, 3);
      ASSERT_EQ(apply_ederivation(delta, f * g), delta.apply(f) * g + delta.phi().apply(f) * delta.apply(g));
    }
  }
}

TEST(Iterate, Composition) {
  Rng rng(37);
  const RingContext ctx{2, Q};
  for (int k = 0; k < 30; ++k) {
    const auto d = random_derivation(rng, ctx);
    const auto phi = random_endomorphism(rng, ctx);
    const EDerivation<LaurentPoly> delta(phi);
    const auto f = testing::random_poly(rng, ctx, 3, 2);
    const std::size_t i = rng.range(0, 3);
    const std::size_t j = rng.range(0, 3);
    ASSERT_EQ(iterate_operator(d, i + j, f), iterate_operator(d, i, iterate_operator(d, j, f)));
    ASSERT_EQ(iterate_operator(phi, i + j, f), iterate_operator(phi, i, iterate_operator(phi, j, f)));
    ASSERT_EQ(iterate_operator(delta, i + j, f), iterate_operator(delta, i, iterate_operator(delta, j, f)));
  }
}

// With D(v) = c v, D^m (1-v)^-1 = N_m / (1-v)^(m+1) where N_0 = 1 and
// N_{m+1} = c v (N_m' (1-v) + (m+1) N_m). Then p_m = (N_m - m! c^m v^m) / (1-v).
UniPoly numerator_recursion(const Scalar& c, std::size_t m) {
  const UniPoly t = UniPoly::t(Q);
  const UniPoly one = UniPoly::constant(Q, Q.one());
  UniPoly num = one;
  for (std::size_t k = 0; k < m; ++k) {
    num = t * (num.derivative() * (one - t) + num * Q(static_cast<long>(k + 1))) * c;
  }
  Scalar fact = Q.one();
  for (std::size_t k = 2; k <= m; ++k) fact *= Q(static_cast<long>(k));
  const UniPoly lead = UniPoly::monomial(Q, m, fact * c.pow(static_cast<long>(m)));
  const auto [q, r] = (num - lead).divmod(one - t);
  EXPECT_TRUE(r.is_zero());
  return q;
}

TEST(GeometricDerivatives, MatchesNumeratorRecursion) {
  for (const Scalar& c : {Q(1), Q(2), Q.parse("1/2"), Q(-3)}) {
    for (std::size_t m = 1; m <= 6; ++m) {
      const auto rep = eq21_check(c, m, 40);
      ASSERT_TRUE(rep.polynomial);
      EXPECT_EQ(rep.p, numerator_recursion(c, m)) << "c=" << c.to_string() << " m=" << m;
      EXPECT_LE(rep.p.degree(), static_cast<long>(m));
    }
  }
}

TEST(GeometricDerivatives, SmallCasesByHand) {
  const Scalar c = Q(3);
  EXPECT_TRUE(eq21_check(c, 1, 40).p.is_zero());
  EXPECT_EQ(eq21_check(c, 2, 40).p, UniPoly::monomial(Q, 1, c * c));
  EXPECT_THROW(eq21_check(c, 6, 20), Inconclusive);
}

TEST(Graded, ComponentsSumToOriginalAndShiftWeights) {
  Rng rng(38);
  const RingContext ctx{2, Q};
  for (int k = 0; k < 60; ++k) {
    const auto d = random_derivation(rng, ctx);
    const MultiIndex w({rng.range(1, 3), rng.range(1, 3)});
    const auto pieces = graded_decompose(d, w);
    std::vector<LaurentPoly> sum(2, LaurentPoly(ctx));
    for (const auto& [i, di] : pieces.components) {
      for (std::size_t v = 0; v < 2; ++v) sum[v] += di.coeffs()[v];
      for (const auto& b : monomials_up_to(2, 3)) {
        const auto img = di.apply(LaurentPoly::monomial(ctx, b));
        for (const auto& [a, c] : img.terms()) ASSERT_EQ(weight(a, w), weight(b, w) + i);
      }
    }
    ASSERT_EQ(sum, d.coeffs());
    if (pieces.components.empty()) EXPECT_FALSE(pieces.lowest().has_value());
  }
}

TEST(Graded, RejectsNonPositiveWeights) {
  const RingContext ctx{2, Q};
  const auto d = Derivation<LaurentPoly>::diagonal(ctx, {Q(1), Q(1)});
  EXPECT_THROW(graded_decompose(d, MultiIndex({1, 0})), InputError);
}

TEST(LocalizedEndo, FlagsNegativeAlpha) {
  const RingContext ctx{2, Q};
  const auto h = TruncSeries::one(ctx, 4);
  LocalizedEndomorphism ok{{{MultiIndex({1, 0}), h}, {MultiIndex({0, 2}), h}}};
  EXPECT_EQ(localized_endo_validate(ok).get("status"), "holds");
  LocalizedEndomorphism bad{{{MultiIndex({-1, 0}), h}, {MultiIndex({0, 1}), h}}};
  EXPECT_EQ(localized_endo_validate(bad).get("status"), "flagged");
  LocalizedEndomorphism broken{{{MultiIndex({1, 0}), TruncSeries::variable(ctx, 4, 0)}}};
  EXPECT_THROW(localized_endo_validate(broken), InputError);
}

}  // namespace
}  // namespace mzlab
