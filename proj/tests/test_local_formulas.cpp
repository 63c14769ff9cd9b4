#include <gtest/gtest.h>

#include "test_support.hpp"
#include "zeta/local_formulas.hpp"
#include "zeta/number_fields.hpp"
#include "zeta/oracle.hpp"

using namespace zeta;
using zeta::testing::big;
using zeta::testing::poly;

TEST(Rank2Local, SolomonShapeAtTwo) {
  const auto f = rank2_local({2, 1, 1}, ValuationOfN::finite(1));
  EXPECT_EQ(f, LocalFactor(2, poly({1, -1, 2}), poly({1, -2, 1})));
}

TEST(Rank2Local, ValuationZeroIsDedekindSquared) {
  for (std::int64_t p : {2, 3, 5})
    for (int e : {1, 2, 3})
      for (int f : {1, 2, 3}) {
        const Poly one_minus = Poly{1} - Poly::monomial(1, static_cast<std::size_t>(f));
        EXPECT_EQ(rank2_local({p, e, f}, ValuationOfN::finite(0)), LocalFactor(p, poly({1}), one_minus * one_minus));
      }
}

TEST(Rank2Local, ValuationTwoAgainstCensus) {
  const auto f = rank2_local({2, 1, 1}, ValuationOfN::finite(2));
  // [(1 + 2u^2)(1 - u) + 4u^4] / (1 - u)^2
  EXPECT_EQ(f, LocalFactor(2, poly({1, -1, 2, -2, 4}), poly({1, -2, 1})));
  const auto c = f.expand(5);
  const IntegralOrder order = quadratic_order(4);
  for (std::size_t k = 0; k <= 5; ++k) EXPECT_EQ(c[k], count_left_ideals(order, std::int64_t{1} << k)) << k;
}

TEST(Rank2Local, InfiniteValuation) {
  const auto f = rank2_local({3, 1, 1}, ValuationOfN::infinite());
  EXPECT_EQ(f, LocalFactor(3, poly({1}), poly({1, -1, -3, 3})));
}

TEST(Rank2IdealCount, Examples) {
  EXPECT_EQ(rank2_ideal_count({5, 1, 2}, ValuationOfN::infinite(), 3, 2), 625);
  EXPECT_EQ(rank2_ideal_count({5, 1, 2}, ValuationOfN::infinite(), 1, 2), 0);
  EXPECT_EQ(rank2_ideal_count({3, 2, 1}, ValuationOfN::finite(4), 0, 0), 1);
  // a in Z/4 with 2 + 2a = 0 mod 4: a in {1, 3}.
  std::int64_t brute = 0;
  for (int a = 0; a < 4; ++a) brute += (2 + 2 * a) % 4 == 0;
  EXPECT_EQ(brute, 2);
  EXPECT_EQ(rank2_ideal_count({2, 1, 1}, ValuationOfN::finite(1), 1, 2), brute);
}

TEST(Rank2IdealCount, EnumerationOverResidueRing) {
  // For R = Z_p (e = f = 1) count a mod p^r2 with p^r1 + a n = 0 mod p^r2 directly.
  for (std::int64_t p : {2, 3})
    for (std::int64_t n : {1, 2, 3, 4, 6, 9, 12})
      for (int r1 = 0; r1 <= 4; ++r1)
        for (int r2 = 0; r2 <= 4; ++r2) {
          std::int64_t mod = 1, pr1 = 1;
          for (int i = 0; i < r2; ++i) mod *= p;
          for (int i = 0; i < r1; ++i) pr1 *= p;
          std::int64_t brute = 0;
          for (std::int64_t a = 0; a < mod; ++a) brute += (pr1 + a * n) % mod == 0;
          EXPECT_EQ(rank2_ideal_count({p, 1, 1}, ValuationOfN::of(n, p), r1, r2), brute)
              << "p=" << p << " n=" << n << " r1=" << r1 << " r2=" << r2;
        }
}

TEST(Rank2SchemeLocal, Examples) {
  EXPECT_EQ(rank2_scheme_local({2, 1, 1}, 2), LocalFactor(2, poly({1, -1, 2}), poly({1, -2, 1})));
  EXPECT_EQ(rank2_scheme_local({2, 1, 2}, 2), LocalFactor(2, poly({1, 0, -1, 0, 4}), poly({1, 0, -2, 0, 1})));
  EXPECT_EQ(rank2_scheme_local({3, 1, 1}, 6), LocalFactor(3, poly({1, -1, 3}), poly({1, -2, 1})));
  // p not dividing n: the maximal factor.
  EXPECT_EQ(rank2_scheme_local({5, 1, 1}, 6), LocalFactor(5, poly({1}), poly({1, -2, 1})));
}

TEST(SolomonCp, MatchesRankTwoAtTwo) {
  EXPECT_EQ(solomon_cp_local(2), rank2_scheme_local({2, 1, 1}, 2));
}

TEST(SolomonCp, ExpansionAtThree) {
  const auto conv = zeta::testing::series_mul(big({1, 2, 3, 4}), big({1, -1, 3}), 3);
  EXPECT_EQ(solomon_cp_local(3).expand(3), conv);
  EXPECT_EQ(conv, big({1, 1, 4, 7}));
}

TEST(SolomonCp, CorrectionOverDedekindIsScalarFactor) {
  for (std::int64_t p : {3, 5, 7}) {
    const LocalFactor dedekind =
        lf_mul(dedekind_local(FieldDescriptor::rational(), p), dedekind_local(FieldDescriptor::cyclotomic(p), p));
    EXPECT_EQ(solomon_cp_local(p), LocalFactor(p, Poly{1, -1, BigInt(p)} * dedekind.numerator(), dedekind.denominator()));
  }
}

TEST(HeyLocal, Examples) {
  EXPECT_EQ(hey_local({1, 1, 1, {7, 1, 1}}), LocalFactor(7, poly({1}), poly({1, -1})));
  EXPECT_EQ(hey_local({1, 1, 2, {2, 1, 1}}), LocalFactor(2, poly({1}), poly({1, -1}) * poly({1, -2})));
  EXPECT_EQ(hey_local({2, 1, 1, {3, 1, 1}}), LocalFactor(3, poly({1}), poly({1, 0, -1})));
}

TEST(HeyLocal, FieldCaseIsDedekind) {
  for (std::int64_t ell : {3, 5, 7})
    for (std::int64_t p : {2, 3, 5, 7}) {
      for (const auto& P : splitting(FieldDescriptor::cyclotomic(ell), p).primes_above)
        EXPECT_EQ(hey_local({1, 1, 1, {p, P.ramification, P.residue_degree}}), geometric_factor(p, 1, static_cast<std::size_t>(P.residue_degree)));
    }
}

TEST(Rank2Local, ProofIdentityOnGrid) {
  for (std::int64_t p : {2, 3})
    for (int e : {1, 2})
      for (int f : {1, 2})
        for (auto val : {ValuationOfN::finite(0), ValuationOfN::finite(1), ValuationOfN::finite(2), ValuationOfN::infinite()}) {
          const PadicRingData ring{p, e, f};
          const auto c = rank2_local(ring, val).expand(static_cast<std::size_t>(6 * f));
          for (int K = 0; K <= 6; ++K) {
            BigInt sum = 0;
            for (int r1 = 0; r1 <= K; ++r1) sum += rank2_ideal_count(ring, val, r1, K - r1);
            EXPECT_EQ(c[static_cast<std::size_t>(f * K)], sum);
          }
          for (std::size_t i = 0; i < c.size(); ++i)
            if (i % static_cast<std::size_t>(f) != 0) EXPECT_EQ(c[i], 0);
        }
}

TEST(LocalFormulas, Preconditions) {
  EXPECT_THROW(rank2_local({4, 1, 1}, ValuationOfN::finite(1)), PreconditionError);
  EXPECT_THROW(rank2_local({2, 0, 1}, ValuationOfN::finite(1)), PreconditionError);
  EXPECT_THROW(ValuationOfN::finite(-1), PreconditionError);
  EXPECT_THROW(solomon_cp_local(6), PreconditionError);
  EXPECT_THROW(hey_local({0, 1, 1, {2, 1, 1}}), PreconditionError);
  EXPECT_TRUE(ValuationOfN::of(0, 5).is_infinite());
  EXPECT_EQ(ValuationOfN::of(50, 5).value(), 2);
}
