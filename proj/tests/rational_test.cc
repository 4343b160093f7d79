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

#include "pdakit/errors.h"
#include "pdakit/rational.h"

namespace pdakit {
namespace {

TEST(Rational, FloorCeil) {
  EXPECT_EQ(Floor(MakeRational(7, 2)), 3);
  EXPECT_EQ(Ceil(MakeRational(7, 2)), 4);
  EXPECT_EQ(Floor(MakeRational(-7, 2)), -4);
  EXPECT_EQ(Ceil(MakeRational(-7, 2)), -3);
  EXPECT_EQ(Ceil(MakeRational(8, 2)), 4);
  EXPECT_TRUE(IsIntegral(MakeRational(8, 2)));
  EXPECT_EQ(CeilDiv(10, 3), 4);
  EXPECT_THROW(MakeRational(1, 0), Error);
}

TEST(Rational, Binomial) {
  EXPECT_EQ(Binomial(10, 3), 120);
  EXPECT_EQ(Binomial(5, 7), 0);
  EXPECT_EQ(Binomial(5, -1), 0);
  EXPECT_EQ(Binomial(100, 50),
            BigInt("100891344545564193334812497256"));
  EXPECT_EQ(Pow(3, 4), 81);
  EXPECT_THROW(ToU64(Pow(2, 64)), Error);
}

TEST(Rational, Decimal) {
  EXPECT_EQ(ToString(MakeRational(6, 4)), "3/2");
  EXPECT_EQ(ToString(Rational(5)), "5");
  EXPECT_EQ(ToDecimal(MakeRational(1, 8), 2), "0.12");
  EXPECT_EQ(ToDecimal(MakeRational(3, 8), 2), "0.38");
  EXPECT_EQ(ToDecimal(MakeRational(2, 3), 3), "0.667");
  EXPECT_EQ(ToDecimal(MakeRational(-2, 3), 1), "-0.7");
  EXPECT_EQ(ToDecimal(Rational(2), 0), "2");
  EXPECT_EQ(ToScientific(MakeRational(1, 42), 4).str(), "2.3810e-02");
  EXPECT_EQ(ToScientific(MakeRational(9999, 100000), 2).str(), "1.00e-01");
}

}  // namespace
}  // namespace pdakit
