/*
Copyright 2026 The pdakit Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/


#include <gtest/gtest.h>

#include "pdakit/bounds.h"
#include "pdakit/constructions.h"
#include "pdakit/errors.h"

namespace pdakit {
namespace {

// Direct transcription of the recursion, in plain integers.
std::uint64_t SecondBoundByRecursion(std::uint64_t K, std::uint64_t F,
                                     std::uint64_t Z) {
  std::uint64_t a = ((F - Z) * K + F - 1) / F;
  std::uint64_t sum = 0;
  for (std::uint64_t r = 0; r < F - Z; ++r) {
    sum += a;
    const std::uint64_t num = a * (F - Z - 1 - r);
    const std::uint64_t den = F - 1 - r;
    a = den == 0 ? 0 : (num + den - 1) / den;
  }
  return sum;
}

TEST(BoundFirst, Examples) {
  const FirstBound b = BoundFirst(6, 8, 5);
  EXPECT_EQ(b.numerator, 144);
  EXPECT_EQ(b.denominator, 38);
  EXPECT_EQ(b.value, MakeRational(72, 19));
  EXPECT_EQ(BoundFirst(4, 6, 3).value, Rational(4));
  EXPECT_THROW(BoundFirst(0, 6, 3), Error);
  EXPECT_THROW(BoundFirst(4, 6, 6), Error);
}

TEST(BoundSecond, Examples) {
  EXPECT_EQ(BoundSecondTerms(6, 8, 5),
            (std::vector<BigInt>{3, 1, 1}));
  EXPECT_EQ(BoundSecond(6, 8, 5), 5);
  EXPECT_EQ(BoundSecond(4, 6, 3), 4);
  EXPECT_EQ(BoundSecond(3, 3, 0), 9);
}

TEST(BoundSecond, AgreesWithRecursionAndTheSimpleBound) {
  for (std::uint64_t K = 1; K <= 12; ++K) {
    for (std::uint64_t F = 1; F <= 12; ++F) {
      for (std::uint64_t Z = 0; Z < F; ++Z) {
        const BigInt b2 = BoundSecond(K, F, Z);
        ASSERT_EQ(b2, SecondBoundByRecursion(K, F, Z))
            << K << " " << F << " " << Z;
        ASSERT_GE(b2, CeilDiv(BigInt((F - Z) * K), BigInt(Z + 1)));
      }
    }
  }
}

TEST(BoundFirst, TightForMn) {
  for (std::uint32_t k = 2; k <= 8; ++k) {
    for (std::uint32_t t = 1; t < k; ++t) {
      const Pda p = BuildMn({k, t});
      const ValidationVerdict v = Validate(p);
      EXPECT_TRUE(FirstBoundTight(v.stats));
      EXPECT_EQ(BoundFirst(k, p.rows(), *v.params.Z).value,
                Rational(BigInt(v.params.S)));
    }
  }
  EXPECT_FALSE(FirstBoundTight(
      ComputeStats(ParsePda("2 2\n* 0\n1 1\n"))));
}

TEST(RateBound, Examples) {
  const RateBound a = BoundRateTradeoff(6, 4, MakeRational(1, 2));
  EXPECT_EQ(a.value, Rational(1));
  EXPECT_FALSE(a.loose_since_f_exceeds_k);
  const RateBound b = BoundRateTradeoff(4, 6, MakeRational(1, 2));
  EXPECT_EQ(b.value, MakeRational(1, 2));
  EXPECT_TRUE(b.loose_since_f_exceeds_k);
  EXPECT_THROW(BoundRateTradeoff(4, 6, MakeRational(1, 4)), Error);
  EXPECT_THROW(BoundRateTradeoff(4, 6, Rational(0)), Error);
  EXPECT_THROW(BoundRateTradeoff(4, 6, Rational(1)), Error);
}

TEST(RateBound, MetByP2) {
  for (std::int64_t k = 3; k <= 9; ++k) {
    for (std::int64_t t = 1; t < k - 1; ++t) {
      const SchemeParams p = P2Params(k, t);
      const RateBound b = BoundRateTradeoff(ToU64(p.K), ToU64(p.F),
                                            p.memory_ratio());
      EXPECT_EQ(b.value, p.rate()) << k << " " << t;
    }
  }
}

TEST(RowBound, Examples) {
  EXPECT_EQ(BoundRowsForRegular(4, MakeRational(1, 2)), 6);
  EXPECT_EQ(BoundRowsForRegular(6, MakeRational(1, 2)), 20);
  EXPECT_EQ(BoundRowsForRegular(4, 6, 3), 6);
  EXPECT_TRUE(MeetsRowBound(4, 6, 3));
  EXPECT_THROW(BoundRowsForRegular(4, 6, 1), Error);
}

TEST(Report, TextAndCsv) {
  const BoundReport r = MakeBoundReport(6, 8, 5, 5);
  EXPECT_EQ(r.n, 18u);
  EXPECT_EQ(r.bound1_ceiling, 4);
  EXPECT_EQ(r.bound2, 5);
  ASSERT_TRUE(r.rate_bound.has_value());
  EXPECT_FALSE(r.rows_for_regular.has_value());
  const std::string text = FormatBoundReport(r);
  EXPECT_NE(text.find("72/19"), std::string::npos);
  EXPECT_NE(text.find("3 + 1 + 1 = 5"), std::string::npos);
  EXPECT_EQ(FormatBoundReportCsv(r).substr(0, 6), "K,F,Z,");
  EXPECT_FALSE(MakeBoundReport(3, 3, 0).rate_bound.has_value());
}

TEST(Pareto, Certificates) {
  for (std::int64_t k = 4; k <= 8; ++k) {
    for (std::int64_t t = 1; t < k - 1; ++t) {
      const Certificate c = ParetoCheckP1(k, t);
      EXPECT_TRUE(c.holds()) << c.Format();
    }
  }
  for (std::int64_t k = 3; k <= 8; ++k) {
    for (std::int64_t t = 1; t < k - 1; ++t) {
      const Certificate c = ParetoCheckP2(k, t);
      EXPECT_TRUE(c.holds()) << c.Format();
      EXPECT_FALSE(c.lines.empty());
    }
  }
}

TEST(Pareto, FormatMarksFailures) {
  Certificate c;
  c.lines.push_back({"x", Rational(1), Rational(2), ">", false});
  EXPECT_FALSE(c.holds());
  EXPECT_NE(c.Format().find("x"), std::string::npos);
}

}  // namespace
}  // namespace pdakit
