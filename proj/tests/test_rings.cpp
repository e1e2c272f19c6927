#include <gtest/gtest.h>

#include "support.hpp"

namespace mzlab {
namespace {

using testing::Rng;

const Field Q = Field::rationals();

// Evaluation at a point with nonzero rational entries is a ring map, so it
// checks products without going through the code under test.
Scalar eval(const LaurentPoly& f, const std::vector<Scalar>& pt) {
  Scalar acc = f.context().field.zero();
  for (const auto& [a, c] : f.terms()) {
    Scalar t = c;
    for (std::size_t i = 0; i < a.size(); ++i) t *= pt[i].pow(a[i]);
    acc += t;
  }
  return acc;
}

TEST(Scalar, RationalCanonicalForm) {
  EXPECT_EQ(Q.parse("-6/4").to_string(), "-3/2");
  EXPECT_EQ(Q.parse("0/7"), Q.zero());
  EXPECT_THROW(Q.parse("1/0"), InputError);
  EXPECT_THROW(Q.zero().inverse(), InputError);
}

TEST(Scalar, PrimeFieldArithmetic) {
  const Field f7 = Field::prime(7);
  EXPECT_EQ(f7(-1).to_string(), "6");
  EXPECT_EQ(f7(3) * f7(5), f7(1));
  EXPECT_EQ(f7(3).inverse(), f7(5));
  EXPECT_EQ(f7.parse("1/2"), f7(4));
  EXPECT_EQ(f7(2).pow(6), f7.one());
  EXPECT_THROW(Field::prime(9), InputError);
}

TEST(Scalar, MixingCharacteristicsIsAnError) {
  EXPECT_THROW(Q(1) + Field::prime(5)(1), ContextError);
}

TEST(Scalar, FermatOnRandomResidues) {
  Rng rng(11);
  for (unsigned p : {2u, 3u, 5u, 7u, 101u, 1000003u}) {
    const Field f = Field::prime(p);
    for (int k = 0; k < 50; ++k) {
      const Scalar a = f(static_cast<long>(rng.range(1, p - 1)));
      EXPECT_EQ(a.pow(static_cast<long>(p - 1)), f.one());
      EXPECT_EQ(a * a.inverse(), f.one());
    }
  }
}

TEST(Laurent, CanonicalTextOrder) {
  const RingContext ctx{2, Q};
  LaurentPoly f(ctx);
  f.add_term(MultiIndex({2, -1}), Q.parse("3/2"));
  f.add_term(MultiIndex({1, 0}), Q(-1));
  f.add_term(MultiIndex({0, 0}), Q(5));
  EXPECT_EQ(f.to_string(), "5 - x1 + 3/2*x1^2*x2^-1");
  EXPECT_EQ(LaurentPoly(ctx).to_string(), "0");
}

TEST(Laurent, RingAxiomsOnRandomTriples) {
  Rng rng(1);
  for (std::size_t n = 1; n <= 3; ++n) {
    const RingContext ctx{n, Q};
    for (int k = 0; k < 400; ++k) {
      const auto f = testing::random_laurent(rng, ctx, 4, -3, 3);
      const auto g = testing::random_laurent(rng, ctx, 4, -3, 3);
      const auto h = testing::random_laurent(rng, ctx, 3, -3, 3);
      ASSERT_EQ((f * g) * h, f * (g * h));
      ASSERT_EQ(f * g, g * f);
      ASSERT_EQ(f + g, g + f);
      ASSERT_EQ(f * (g + h), f * g + f * h);
      ASSERT_EQ(lp_arith(f, g, ArithOp::sub) + g, f);
    }
  }
}

TEST(Laurent, ProductMatchesEvaluation) {
  Rng rng(2);
  const RingContext ctx{2, Q};
  for (int k = 0; k < 200; ++k) {
    const auto f = testing::random_laurent(rng, ctx, 5, -4, 4);
    const auto g = testing::random_laurent(rng, ctx, 5, -4, 4);
    const std::vector<Scalar> pt{rng.nonzero_scalar(Q), rng.nonzero_scalar(Q)};
    ASSERT_EQ(eval(f * g, pt), eval(f, pt) * eval(g, pt));
    ASSERT_EQ(eval(f.pow(3), pt), eval(f, pt).pow(3));
  }
}

TEST(Laurent, CoefficientIsLinear) {
  Rng rng(3);
  const RingContext ctx{2, Q};
  for (int k = 0; k < 200; ++k) {
    const auto f = testing::random_laurent(rng, ctx, 6, -2, 2);
    const auto g = testing::random_laurent(rng, ctx, 6, -2, 2);
    const Scalar s = rng.scalar(Q);
    const MultiIndex a = testing::random_exponent(rng, 2, -2, 2);
    ASSERT_EQ(lp_coeff(f + g, a), lp_coeff(f, a) + lp_coeff(g, a));
    ASSERT_EQ(lp_coeff(f * s, a), s * lp_coeff(f, a));
  }
}

TEST(Laurent, UnitsAreMonomials) {
  const RingContext ctx{2, Q};
  const auto u = LaurentPoly::monomial(ctx, MultiIndex({2, -3}), Q(4));
  EXPECT_EQ(u * u.inverse(), LaurentPoly::constant(ctx, 1));
  EXPECT_EQ(u.pow(-2), u.inverse().pow(2));
  const auto x1 = LaurentPoly::variable(ctx, 0);
  EXPECT_THROW((x1 + LaurentPoly::constant(ctx, 1)).inverse(), NotAUnit);
  EXPECT_THROW(LaurentPoly(ctx).inverse(), NotAUnit);
}

TEST(Laurent, ContextMismatchIsAnError) {
  const auto a = LaurentPoly::variable(RingContext{2, Q}, 0);
  const auto b = LaurentPoly::variable(RingContext{3, Q}, 0);
  const auto c = LaurentPoly::variable(RingContext{2, Field::prime(3)}, 0);
  EXPECT_THROW(a + b, ContextError);
  EXPECT_THROW(a * c, ContextError);
}

TEST(Series, RingAxiomsOnRandomTriples) {
  Rng rng(4);
  for (std::size_t n = 1; n <= 2; ++n) {
    const RingContext ctx{n, Q};
    for (int k = 0; k < 500; ++k) {
      const auto f = testing::random_series(rng, ctx, 6, 5);
      const auto g = testing::random_series(rng, ctx, 6, 5);
      const auto h = testing::random_series(rng, ctx, 6, 4);
      ASSERT_EQ(ts_mul(ts_mul(f, g), h), ts_mul(f, ts_mul(g, h)));
      ASSERT_EQ(ts_mul(f, g), ts_mul(g, f));
      ASSERT_EQ(ts_mul(f, g + h), ts_mul(f, g) + ts_mul(f, h));
    }
  }
}

TEST(Series, InverseIsTwoSided) {
  Rng rng(5);
  for (const Field f : {Q, Field::prime(5)}) {
    const RingContext ctx{2, f};
    for (int k = 0; k < 100; ++k) {
      const auto u = testing::random_series(rng, ctx, 7, 6, true);
      const auto v = ts_inverse(u);
      ASSERT_EQ(ts_mul(u, v), TruncSeries::one(ctx, 7));
      ASSERT_EQ(ts_mul(v, u), TruncSeries::one(ctx, 7));
    }
  }
}

TEST(Series, GeometricSeries) {
  const RingContext ctx{1, Q};
  const auto x = TruncSeries::variable(ctx, 10, 0);
  const auto one = TruncSeries::one(ctx, 10);
  EXPECT_EQ((one - x).inverse(), TruncSeries::geometric(ctx, 10, 0));
  EXPECT_THROW(x.inverse(), NotAUnit);
}

TEST(Series, TruncationCoherence) {
  Rng rng(6);
  const RingContext ctx{2, Q};
  const std::int64_t big = 8;
  for (int k = 0; k < 60; ++k) {
    const std::int64_t small = rng.range(0, big - 1);
    const auto f = testing::random_series(rng, ctx, big, 6);
    const auto g = testing::random_series(rng, ctx, big, 6);
    const auto u = testing::random_series(rng, ctx, big, 5, true);
    ASSERT_EQ((f * g).truncate(small), f.truncate(small) * g.truncate(small));
    ASSERT_EQ(u.inverse().truncate(small), u.truncate(small).inverse());

    std::vector<TruncSeries> imgs{testing::random_series(rng, ctx, big, 4, false, true),
                                  testing::random_series(rng, ctx, big, 4, false, true)};
    std::vector<TruncSeries> small_imgs{imgs[0].truncate(small), imgs[1].truncate(small)};
    ASSERT_EQ(ts_substitute(f, imgs).truncate(small), ts_substitute(f.truncate(small), small_imgs));
  }
}

TEST(Series, SubstitutionIsARingMap) {
  Rng rng(7);
  const RingContext ctx{2, Q};
  for (int k = 0; k < 60; ++k) {
    const auto f = testing::random_series(rng, ctx, 6, 5);
    const auto g = testing::random_series(rng, ctx, 6, 5);
    std::vector<TruncSeries> imgs{testing::random_series(rng, ctx, 6, 4, false, true),
                                  testing::random_series(rng, ctx, 6, 4, false, true)};
    ASSERT_EQ(ts_substitute(f * g, imgs), ts_substitute(f, imgs) * ts_substitute(g, imgs));
  }
}

TEST(Series, SubstitutionRejectsUnitImages) {
  const RingContext ctx{1, Q};
  const auto x = TruncSeries::variable(ctx, 4, 0);
  EXPECT_THROW(ts_substitute(x, {x + TruncSeries::one(ctx, 4)}), InputError);
}

TEST(Series, FormalInverseRoundTrip) {
  Rng rng(8);
  const RingContext ctx{2, Q};
  const std::int64_t order = 6;
  int done = 0;
  while (done < 40) {
    std::vector<TruncSeries> f{testing::random_series(rng, ctx, order, 6, false, true),
                               testing::random_series(rng, ctx, order, 6, false, true)};
    if (linear_part_matrix(f).rank() < 2) continue;
    const auto g = formal_inverse(f, order);
    const auto id = identity_map(ctx, order);
    ASSERT_EQ(ts_compose(f, g), id);
    ASSERT_EQ(ts_compose(g, f), id);
    const auto g3 = formal_inverse(std::vector<TruncSeries>{f[0].truncate(3), f[1].truncate(3)}, 3);
    ASSERT_EQ(g3[0], g[0].truncate(3));
    ASSERT_EQ(g3[1], g[1].truncate(3));
    ++done;
  }
}

TEST(Series, FormalInverseNeedsInvertibleJacobian) {
  const RingContext ctx{2, Q};
  const auto x1 = TruncSeries::variable(ctx, 4, 0);
  EXPECT_THROW(formal_inverse({x1, x1 * x1}, 4), InputError);
}

TEST(Series, CoefficientsBeyondOrderAreUnknown) {
  const RingContext ctx{1, Q};
  const auto x = TruncSeries::variable(ctx, 3, 0);
  EXPECT_THROW(x.coeff(MultiIndex({4})), Inconclusive);
  EXPECT_THROW(TruncSeries(ctx, -1), InputError);
}

TEST(Series, MulValidTracksPrecision) {
  const RingContext ctx{1, Q};
  const auto f = TruncSeries::variable(ctx, 5, 0) * TruncSeries::variable(ctx, 5, 0);
  const auto g = TruncSeries::one(ctx, 3);
  EXPECT_EQ(mul_valid(f, g).order(), 5);
  EXPECT_EQ(mul_valid(f, TruncSeries::variable(ctx, 3, 0)).order(), 5);
  EXPECT_EQ(mul_valid(TruncSeries::one(ctx, 5), TruncSeries::variable(ctx, 3, 0)).order(), 3);
}

TEST(Localized, PowersAndConstantTerm) {
  const RingContext ctx{1, Q};
  const auto a = LocalizedSeries::monomial(ctx, 12, MultiIndex({-1}));
  const auto b = LocalizedSeries::from_series(TruncSeries::geometric(ctx, 12, 0));
  for (std::int64_t m = 1; m <= 10; ++m) {
    EXPECT_EQ((b * a.pow(m)).constant_term(), Q.one());
    EXPECT_EQ((a.pow(m) * a.pow(-m)).constant_term(), Q.one());
  }
  EXPECT_EQ(a.pow(-2).shift(), MultiIndex({2}));
}

TEST(Localized, SumRebasesShift) {
  const RingContext ctx{1, Q};
  const auto a = LocalizedSeries::monomial(ctx, 6, MultiIndex({-2}));
  const auto b = LocalizedSeries::monomial(ctx, 6, MultiIndex({1}));
  const auto s = a + b;
  EXPECT_EQ(s.shift(), MultiIndex({-2}));
  EXPECT_EQ(s.coeff(MultiIndex({1})), Q.one());
  EXPECT_EQ(s.coeff(MultiIndex({-2})), Q.one());
  EXPECT_EQ(s.coeff(MultiIndex({0})), Q.zero());
}

}  // namespace
}  // namespace mzlab
