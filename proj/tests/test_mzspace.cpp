#include <gtest/gtest.h>

#include "support.hpp"

namespace mzlab {
namespace {

using testing::Rng;

const Field Q = Field::rationals();
const long kPrimes[] = {2, 3, 5, 7};

DiagonalEndoSpec prime_scaling(std::size_t n) {
  DiagonalEndoSpec s;
  for (std::size_t i = 0; i < n; ++i) s.lambda.push_back(Q(kPrimes[i]));
  return s;
}

DiagonalDerivationSpec standard_basis(std::size_t n) {
  DiagonalDerivationSpec s;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Scalar> w(n, Q.zero());
    w[i] = Q.one();
    s.c.push_back(w);
  }
  return s;
}

TEST(Monomials, CountsMatchBinomials) {
  EXPECT_EQ(monomials_of_degree(2, 3).size(), 4u);
  EXPECT_EQ(monomials_up_to(3, 2).size(), 10u);
  EXPECT_EQ(monomials_up_to(1, 0).size(), 1u);
}

TEST(Subspace, ParseAndMembership) {
  const auto s = parse_subspace("kernel-support: {(0,0),(1,-1)}");
  EXPECT_EQ(s.nvars, 2u);
  EXPECT_EQ(s.support.size(), 2u);
  EXPECT_EQ(parse_subspace("{(0,0)}").to_string(), "kernel-support: {(0,0)}");
  const RingContext ctx{2, Q};
  const auto x1 = LaurentPoly::variable(ctx, 0);
  const auto x2 = LaurentPoly::variable(ctx, 1);
  EXPECT_TRUE(in_subspace(x1 + x2, s));
  EXPECT_FALSE(in_subspace(x1 * x2.pow(-1) + x2, s));
  const auto cof = parse_subspace("kernel-support-cofinite: {(0,0)}");
  EXPECT_TRUE(cof.cofinite);
  EXPECT_TRUE(in_subspace(LaurentPoly::constant(ctx, 3), cof));
  EXPECT_FALSE(in_subspace(x1, cof));
  EXPECT_THROW(parse_subspace("{(0,0),(1)}"), InputError);
  EXPECT_THROW(parse_subspace("{(a)}"), InputError);
}

TEST(Radical, KnownWitness) {
  const RingContext ctx{2, Q};
  const auto a = parse_laurent("x1+x2+(x1*x2)^-1", ctx);
  const auto rep = radical_membership(a, parse_subspace("{(0,0)}"), 1, 10);
  ASSERT_TRUE(rep.witness);
  EXPECT_EQ(*rep.witness, 3u);
}

TEST(Radical, WitnessStableUnderRecomputeAndWiderRange) {
  Rng rng(51);
  const RingContext ctx{2, Q};
  const auto m = SubspaceSpec::constant_term_free(2);
  for (int k = 0; k < 60; ++k) {
    const auto a = testing::random_laurent(rng, ctx, 3, -2, 2);
    const auto r1 = radical_membership(a, m, 1, 6);
    const auto r2 = radical_membership(a, m, 1, 6);
    const auto r3 = radical_membership(a, m, 1, 10);
    ASSERT_EQ(r1.witness, r2.witness);
    if (r1.witness) ASSERT_EQ(r1.witness, r3.witness);
    // a^w really has a nonzero constant term, and no earlier power does
    if (r1.witness) {
      ASSERT_FALSE(a.pow(static_cast<std::int64_t>(*r1.witness)).constant_term().is_zero());
      for (std::size_t e = 1; e < *r1.witness; ++e) ASSERT_TRUE(a.pow(e).constant_term().is_zero());
    }
  }
  EXPECT_THROW(radical_membership(LaurentPoly(ctx), m, 0, 3), InputError);
}

TEST(MZ, TailVerdictForPositiveElement) {
  const RingContext ctx{2, Q};
  const auto x1 = LaurentPoly::variable(ctx, 0);
  const auto x2 = LaurentPoly::variable(ctx, 1);
  const auto m = SubspaceSpec::constant_term_free(2);
  const auto rep = mz_falsify(x1 + x2, m, {x1.pow(-2), LaurentPoly::constant(ctx, 1)}, 10);
  ASSERT_FALSE(rep.vacuous());
  ASSERT_FALSE(rep.violated());
  EXPECT_EQ(*rep.verdicts[0].n_b, 3u);
  EXPECT_EQ(*rep.verdicts[1].n_b, 1u);
  EXPECT_EQ(rep.verdicts[0].witnesses, std::vector<std::size_t>{2});
}

TEST(MZ, VacuousWhenOutsideRadical) {
  const RingContext ctx{1, Q};
  const auto x = LaurentPoly::variable(ctx, 0);
  const auto rep = mz_falsify(x + x.pow(-1), SubspaceSpec::constant_term_free(1), {x}, 6);
  EXPECT_TRUE(rep.vacuous());
  EXPECT_EQ(rep.to_report().get("status"), "vacuous");
}

TEST(MZ, SeriesCounterexampleNeverSettles) {
  const RingContext ctx{1, Q};
  for (std::int64_t order : {10, 25, 60}) {
    const auto a = LocalizedSeries::monomial(ctx, order, MultiIndex({-1}));
    const auto b = parse_localized("(1-x1)^-1", ctx, order);
    const std::size_t mmax = static_cast<std::size_t>(order - 1);
    const auto rep = mz_falsify(a, SubspaceSpec::constant_term_free(1), {b}, mmax);
    ASSERT_FALSE(rep.vacuous());
    ASSERT_FALSE(rep.verdicts[0].n_b.has_value());
    ASSERT_EQ(rep.verdicts[0].witnesses.size(), mmax);
    LocalizedSeries p = b;
    for (std::size_t k = 1; k <= mmax; ++k) {
      p = p * a;
      ASSERT_EQ(p.constant_term(), Q.one());
    }
  }
}

TEST(ImageDiagonal, EndoObstructionIsConstantTerm) {
  Rng rng(52);
  for (std::size_t n = 1; n <= 3; ++n) {
    const RingContext ctx{n, Q};
    const auto spec = prime_scaling(n);
    for (int k = 0; k < 150; ++k) {
      const auto f = testing::random_laurent(rng, ctx, 5, -5, 5);
      const auto v = image_membership_diagonal(spec, f);
      const bool has_constant = !f.constant_term().is_zero();
      ASSERT_EQ(v.member, !has_constant);
      if (v.member) {
        ASSERT_TRUE(v.verified);
        std::vector<LaurentPoly> imgs;
        for (std::size_t i = 0; i < n; ++i) imgs.push_back(LaurentPoly::variable(ctx, i) * spec.lambda[i]);
        const EDerivation<LaurentPoly> delta{Endomorphism<LaurentPoly>(imgs)};
        ASSERT_EQ(delta.apply(*v.preimage), f);
      } else {
        ASSERT_EQ(v.obstruction, std::vector<MultiIndex>{MultiIndex(n)});
      }
    }
  }
}

TEST(ImageDiagonal, DerivationObstructionIsConstantTerm) {
  Rng rng(53);
  for (std::size_t n = 1; n <= 3; ++n) {
    const RingContext ctx{n, Q};
    const auto spec = standard_basis(n);
    for (int k = 0; k < 150; ++k) {
      const auto f = testing::random_laurent(rng, ctx, 5, -5, 5);
      const auto v = image_membership_diagonal(spec, f);
      ASSERT_EQ(v.member, f.constant_term().is_zero());
      if (v.member) {
        ASSERT_TRUE(v.verified);
      } else {
        ASSERT_EQ(v.obstruction, std::vector<MultiIndex>{MultiIndex(n)});
      }
    }
  }
}

TEST(ImageDiagonal, DependentWeightsHaveLargerObstruction) {
  const RingContext ctx{2, Q};
  DiagonalDerivationSpec same{{{Q(1)}, {Q(1)}}};  // c1 = c2: x1/x2 is killed
  const auto f = parse_laurent("x1*x2^-1 + x1", ctx);
  const auto v = image_membership_diagonal(same, f);
  EXPECT_FALSE(v.member);
  EXPECT_EQ(v.obstruction, std::vector<MultiIndex>{MultiIndex({1, -1})});
  DiagonalEndoSpec roots{{Q(-1), Q(1)}};
  EXPECT_FALSE(image_membership_diagonal(roots, parse_laurent("x1^2", ctx)).member);
  EXPECT_THROW(image_membership_diagonal(DiagonalEndoSpec{{Q(0), Q(1)}}, f), InputError);
}

TEST(ImageDiagonal, AgreesWithBoundedSolver) {
  Rng rng(54);
  const RingContext ctx{2, Q};
  const std::int64_t bound = 5;
  const auto endo = prime_scaling(2);
  const EDerivation<LaurentPoly> delta{
      Endomorphism<LaurentPoly>({LaurentPoly::variable(ctx, 0) * Q(2), LaurentPoly::variable(ctx, 1) * Q(3)})};
  // t = (1, 10) separates natural exponents of degree <= 5
  const auto der = standard_basis(2);
  const auto d = Derivation<LaurentPoly>::diagonal(ctx, {Q(1), Q(10)});
  for (int k = 0; k < 80; ++k) {
    const auto f = testing::random_poly(rng, ctx, 4, bound);
    const auto be = image_membership_bounded(delta, f, bound);
    ASSERT_EQ(image_membership_diagonal(endo, f).member, be.member);
    if (be.member) ASSERT_TRUE(be.verified);
    ASSERT_EQ(image_membership_diagonal(der, f).member, image_membership_bounded(d, f, bound).member);
  }
}

TEST(ImageBounded, CharacteristicPCertificates) {
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    const Field f = Field::prime(p);
    const RingContext ctx{1, f};
    const auto t = LaurentPoly::variable(ctx, 0);
    const auto target = t.pow(p - 1);
    const auto bound = static_cast<std::int64_t>(3 * p);
    const Derivation<LaurentPoly> d({LaurentPoly::constant(ctx, 1)});
    const auto vd = image_membership_bounded(d, target, bound);
    EXPECT_FALSE(vd.member);
    EXPECT_TRUE(vd.unconditional);
    EXPECT_TRUE(vd.degree_preserving);
    const EDerivation<LaurentPoly> delta{Endomorphism<LaurentPoly>({t + LaurentPoly::constant(ctx, 1)})};
    const auto ve = image_membership_bounded(delta, target, bound);
    EXPECT_FALSE(ve.member);
    EXPECT_TRUE(ve.unconditional);
    // lower powers are reachable: t^k = D(t^(k+1)/(k+1)) for k + 1 < p
    if (p > 2) EXPECT_TRUE(image_membership_bounded(d, t.pow(p - 2), bound).member);
    EXPECT_TRUE(image_membership_bounded(delta, LaurentPoly::constant(ctx, 1), bound).member);
  }
}

TEST(ImageBounded, RationalDerivativeIsSurjective) {
  const RingContext ctx{1, Q};
  const Derivation<LaurentPoly> d({LaurentPoly::constant(ctx, 1)});
  const auto v = image_membership_bounded(d, parse_laurent("x1^4", ctx), 5);
  ASSERT_TRUE(v.member);
  EXPECT_EQ(v.preimage->to_string(), "1/5*x1^5");
  const auto miss = image_membership_bounded(d, parse_laurent("x1^4", ctx), 4);
  EXPECT_FALSE(miss.member);
  EXPECT_FALSE(miss.unconditional);
  EXPECT_THROW(image_membership_bounded(d, parse_laurent("x1^-1", ctx), 4), InputError);
}

TEST(Telescope, SumIsMinusOne) {
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    const Field f = Field::prime(p);
    EXPECT_EQ(charp_telescope(p), UniPoly::constant(f, -f.one())) << "p=" << p;
  }
}

TEST(KernelIdealTest, KillFirstVariable) {
  const RingContext ctx{2, Q};
  const auto x2 = LaurentPoly::variable(ctx, 1);
  const Endomorphism<LaurentPoly> kill({LaurentPoly(ctx), x2});
  const auto ki = eventual_kernel_ideal(kill, 3, 8);
  // monomials of degree <= 3 divisible by x1: 6 of them
  EXPECT_EQ(ki.basis.size(), 6u);
  for (const auto& g : ki.basis) EXPECT_TRUE(kill.apply(g).is_zero());
}

TEST(RadicalAgreement, RadicalsAgreeOnMonomials) {
  const RingContext ctx{2, Q};
  const auto x1 = LaurentPoly::variable(ctx, 0);
  const auto x2 = LaurentPoly::variable(ctx, 1);
  std::vector<LaurentPoly> tests;
  for (const auto& a : monomials_up_to(2, 4)) tests.push_back(LaurentPoly::monomial(ctx, a));
  for (const auto& phi : {Endomorphism<LaurentPoly>({x1, x2}), Endomorphism<LaurentPoly>({LaurentPoly(ctx), x2}),
                          Endomorphism<LaurentPoly>({x2, x1}), Endomorphism<LaurentPoly>({x1, x1})}) {
    const auto rep = verify_prop_1_4(phi, tests, 5, 10);
    EXPECT_TRUE(rep.agree()) << phi.to_string();
  }
  const auto kill = verify_prop_1_4(Endomorphism<LaurentPoly>({LaurentPoly(ctx), x2}), {x1, x2}, 5, 10);
  EXPECT_TRUE(kill.rows[0].in_rm && kill.rows[0].in_ri);
  EXPECT_FALSE(kill.rows[1].in_rm || kill.rows[1].in_ri);
  EXPECT_THROW(verify_prop_1_4(Endomorphism<LaurentPoly>({x1 * x1, x2}), tests, 5, 10), Unsupported);
}

TEST(PowerSums, ImplicationHoldsOnRandomTuples) {
  Rng rng(55);
  const RingContext ctx{1, Q};
  int hypothesis_held = 0;
  for (int k = 0; k < 300; ++k) {
    const std::int64_t order = rng.range(0, 4);  // Q[x]/(x^(order+1))
    const std::size_t n = rng.range(1, 3);
    const std::size_t r = rng.range(0, 4);
    std::vector<TruncSeries> a;
    for (std::size_t j = 0; j < n; ++j) {
      auto x = testing::random_series(rng, ctx, order, 3, false, true);
      if (rng.range(0, 3) == 0) x = x + TruncSeries::constant(ctx, order, Q(static_cast<long>(rng.range(-2, 2))));
      a.push_back(x);
    }
    const auto rep = power_sum_nilpotency_check(a, r);
    ASSERT_TRUE(rep.consistent());
    hypothesis_held += rep.hypothesis ? 1 : 0;
  }
  EXPECT_GT(hypothesis_held, 20);
}

TEST(PowerSums, HandCases) {
  const RingContext ctx{1, Q};
  const auto e = parse_series("x1", ctx, 1);
  const auto one = parse_series("1", ctx, 1);
  const auto both = power_sum_nilpotency_check({e, -e}, 1);
  EXPECT_TRUE(both.hypothesis);
  EXPECT_TRUE(both.conclusion);
  const auto units = power_sum_nilpotency_check({one, -one}, 1);
  EXPECT_FALSE(units.hypothesis);
  EXPECT_EQ(units.failing_i, 1u);
  EXPECT_EQ(units.to_report().get("failing_exponent"), "2");
  EXPECT_FALSE(units.conclusion);
}

}  // namespace
}  // namespace mzlab
