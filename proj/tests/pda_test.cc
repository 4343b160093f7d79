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

#include <random>

#include "pdakit/errors.h"
#include "pdakit/pda.h"
#include "test_util.h"

namespace pdakit {
namespace {

using testing::Fixture;
using testing::Grid;

Pda FourUserArray() { return ReadPdaFile(Fixture("four_user.pda")); }

bool HasViolation(const ValidationVerdict& v, ViolationKind kind) {
  for (const auto& x : v.violations) {
    if (x.kind == kind) return true;
  }
  return false;
}

TEST(Validate, FourUserArrayIsThreeRegular) {
  const ValidationVerdict v = Validate(FourUserArray());
  ASSERT_TRUE(v.ok());
  EXPECT_TRUE(v.c2());
  EXPECT_EQ(v.params.K, 4u);
  EXPECT_EQ(v.params.F, 6u);
  EXPECT_EQ(v.params.Z, 3u);
  EXPECT_EQ(v.params.S, 4u);
  EXPECT_EQ(v.params.n, 12u);
  EXPECT_EQ(v.params.g, 3u);
  EXPECT_EQ(v.params.rate, Rational(2, 3));
  EXPECT_EQ(v.params.memory_ratio, Rational(1, 2));
  EXPECT_EQ(DescribeParams(v.params), "(K=4,F=6,Z=3,S=4) g=3");
}

TEST(Validate, SixUserArray) {
  const ValidationVerdict v = Validate(ReadPdaFile(Fixture("six_user.pda")));
  ASSERT_TRUE(v.ok());
  EXPECT_EQ(v.params.K, 6u);
  EXPECT_EQ(v.params.F, 8u);
  EXPECT_EQ(v.params.Z, 5u);
  EXPECT_EQ(v.params.S, 5u);
}

TEST(Validate, AllStars) {
  const ValidationVerdict v = Validate(Pda::AllStars(3, 2));
  ASSERT_TRUE(v.ok());
  EXPECT_EQ(v.params.Z, 3u);
  EXPECT_EQ(v.params.S, 0u);
  EXPECT_EQ(v.params.n, 0u);
}

TEST(Validate, CrossEntryWitness) {
  // Symbol 0 moved into (0,3): it now pairs with (1,1) whose cross cell
  // (1,3) holds 2.
  const Pda p = FourUserArray().WithEntry({0, 3}, Entry::Of(0));
  const ValidationVerdict v = Validate(p);
  ASSERT_FALSE(v.ok());
  bool found = false;
  for (const auto& x : v.violations) {
    if (x.kind != ViolationKind::kCrossEntryNotStar || x.symbol != 0) continue;
    const bool pair = (x.pair[0] == Cell{0, 3} && x.pair[1] == Cell{1, 1}) ||
                      (x.pair[0] == Cell{1, 1} && x.pair[1] == Cell{0, 3});
    if (pair && x.cross.size() == 1 && x.cross[0] == Cell{1, 3}) found = true;
  }
  EXPECT_TRUE(found);
  // (0,2) also holds 0 in the same row.
  EXPECT_TRUE(HasViolation(v, ViolationKind::kSameRowRepeat));
}

TEST(Validate, ColumnRepeatAndGap) {
  Grid g = {{0, -1}, {0, -1}};
  EXPECT_TRUE(HasViolation(Validate(testing::FromGrid(g)),
                           ViolationKind::kSameColumnRepeat));
  g = {{0, -1}, {-1, 2}};
  const ValidationVerdict v = Validate(testing::FromGrid(g));
  ASSERT_TRUE(HasViolation(v, ViolationKind::kAlphabetGap));
  EXPECT_EQ(v.violations.front().symbol, 1u);
}

TEST(Validate, ColumnStarMismatchIsOnlyANote) {
  const Grid g = {{-1, -1}, {0, -1}, {-1, 0}, {1, -1}};
  const ValidationVerdict v = Validate(testing::FromGrid(g));
  EXPECT_TRUE(v.ok());
  EXPECT_FALSE(v.c2());
  EXPECT_FALSE(v.params.Z.has_value());
  ASSERT_EQ(v.notes.size(), 1u);
  EXPECT_EQ(v.notes[0].column, 1u);
  EXPECT_EQ(v.notes[0].stars, 3u);
  EXPECT_EQ(v.notes[0].expected_stars, 2u);
}

// Every single-cell change of the four-user array is judged the same way as the naive
// definition, and failures name the changed cell.
TEST(Validate, AllSingleCellMutationsOfFourUserArray) {
  const Pda base = FourUserArray();
  int invalid = 0;
  for (std::size_t i = 0; i < base.rows(); ++i) {
    for (std::size_t j = 0; j < base.cols(); ++j) {
      for (int value = -1; value <= 4; ++value) {
        const Entry e = value < 0 ? Entry::Star()
                                  : Entry::Of(static_cast<Symbol>(value));
        if (e == base.at(i, j)) continue;
        const Pda p = base.WithEntry({i, j}, e);
        const ValidationVerdict v = Validate(p);
        ASSERT_EQ(v.ok(), testing::NaiveIsPda(testing::ToGrid(p)))
            << "cell (" << i << "," << j << ") -> " << value;
        if (v.ok()) continue;
        ++invalid;
        bool names_cell = false;
        for (const auto& x : v.violations) {
          for (const Cell& c : x.pair) names_cell |= c == Cell{i, j};
          for (const Cell& c : x.cross) names_cell |= c == Cell{i, j};
          names_cell |= x.kind == ViolationKind::kAlphabetGap;
        }
        EXPECT_TRUE(names_cell) << "cell (" << i << "," << j << ")";
      }
    }
  }
  EXPECT_GT(invalid, 0);
}

TEST(Validate, RandomGridsAgreeWithNaiveDefinition) {
  std::mt19937_64 rng(7);
  int valid = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    std::uniform_int_distribution<int> dim(1, 6);
    const int F = dim(rng), K = dim(rng);
    const Grid g = testing::Canonical(testing::RandomGrid(rng, F, K, 4, 55));
    const Pda p = testing::FromGrid(g);
    const ValidationVerdict v = Validate(p);
    ASSERT_EQ(v.ok(), testing::NaiveIsPda(g)) << FormatPda(p);
    if (!v.ok()) continue;
    ++valid;
    const auto& s = v.stats;
    std::size_t by_rows = 0;
    for (auto c : s.row_counts) by_rows += c;
    EXPECT_EQ(by_rows, s.total_symbols());
    if (v.params.Z) {
      EXPECT_EQ(v.params.n, (F - *v.params.Z) * K);
    }
  }
  EXPECT_GT(valid, 100);
}

TEST(Validate, ParallelMatchesSerial) {
  std::mt19937_64 rng(11);
  std::vector<Pda> pdas;
  for (int i = 0; i < 200; ++i) {
    pdas.push_back(testing::FromGrid(
        testing::Canonical(testing::RandomGrid(rng, 5, 5, 5, 50))));
  }
  const auto all = ValidateAll(pdas);
  ASSERT_EQ(all.size(), pdas.size());
  for (std::size_t i = 0; i < pdas.size(); ++i) {
    EXPECT_EQ(all[i].ok(), Validate(pdas[i]).ok());
    EXPECT_EQ(all[i].violations.size(), Validate(pdas[i]).violations.size());
  }
}

TEST(Pda, ConstructorRejectsBadShapes) {
  EXPECT_THROW(Pda(0, 3, {}), Error);
  EXPECT_THROW(Pda(2, 2, std::vector<Entry>(3, Entry::Star())), Error);
  try {
    Pda(2, 0, {});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kMalformedGrid);
  }
}

TEST(Pda, RelabelCanonical) {
  const Grid g = {{7, -1}, {-1, 3}, {3, 7}};
  const Pda p = RelabelCanonical(testing::FromGrid(g));
  EXPECT_EQ(testing::ToGrid(p), (Grid{{0, -1}, {-1, 1}, {1, 0}}));
}

TEST(Format, RoundTrip) {
  const Pda p = FourUserArray();
  const std::string text = FormatPda(p);
  EXPECT_EQ(text,
            "6 4\n* * 0 1\n* 0 * 2\n* 1 2 *\n0 * * 3\n1 * 3 *\n2 3 * *\n");
  EXPECT_EQ(ParsePda(text), p);
  EXPECT_EQ(ParsePda("2 2\n*  0\r\n0 *\n\n\n"), ParsePda("2 2\n* 0\n0 *\n"));
}

TEST(Format, StrictParser) {
  auto code = [](const std::string& text) {
    try {
      ParsePda(text);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::kDegenerateInput;  // sentinel: no error
  };
  EXPECT_EQ(code(""), Errc::kParseError);
  EXPECT_EQ(code("2\n* 0\n"), Errc::kParseError);
  EXPECT_EQ(code("2 2\n* 0\n"), Errc::kParseError);
  EXPECT_EQ(code("2 2\n* 0\n0\n"), Errc::kMalformedGrid);
  EXPECT_EQ(code("2 2\n* 0\n0 x\n"), Errc::kParseError);
  EXPECT_EQ(code("2 2\n* -1\n0 *\n"), Errc::kParseError);
  EXPECT_EQ(code("2 2\n* 0\n0 **\n"), Errc::kParseError);
  EXPECT_EQ(code("0 2\n"), Errc::kMalformedGrid);
  EXPECT_EQ(code("1 1\n*\n"), Errc::kDegenerateInput);
}

TEST(Format, MissingFile) {
  EXPECT_THROW(ReadPdaFile(Fixture("does-not-exist.pda")), Error);
  EXPECT_THROW(ReadPdaFile(Fixture("truncated.pda")), Error);
}

}  // namespace
}  // namespace pdakit
