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

#include <fstream>
#include <sstream>

#include "pdakit/caching_sim.h"
#include "pdakit/constructions.h"
#include "pdakit/errors.h"
#include "test_util.h"

namespace pdakit {
namespace {

std::string Slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string TrimNewlines(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

Pda FourUserArray() { return ReadPdaFile(testing::Fixture("four_user.pda")); }

TEST(Deliver, SymbolicTranscriptOfFourUserArray) {
  const Pda p = FourUserArray();
  const FileLibrary lib = FileLibrary::Random(4, 6, 8, 1);
  const std::vector<std::size_t> demand = {0, 1, 2, 3};
  const SimulationTranscript t = Deliver(p, lib, demand);
  EXPECT_EQ(TrimNewlines(RenderSymbolic(t)),
            TrimNewlines(Slurp(testing::Fixture("four_user_slots.txt"))));
  EXPECT_EQ(t.delivered_packet_count(), 4u);
  EXPECT_EQ(t.rate(), MakeRational(2, 3));
  ASSERT_EQ(t.terms[0].size(), 3u);
  EXPECT_EQ(t.terms[0][0], (SlotTerm{0, 3, 0}));
}

TEST(Deliver, SignalIsTheXorOfItsTerms) {
  const Pda p = FourUserArray();
  const FileLibrary lib = FileLibrary::Random(4, 6, 16, 7);
  const std::vector<std::size_t> demand = {3, 3, 0, 2};
  const SimulationTranscript t = Deliver(p, lib, demand);
  for (std::size_t s = 0; s < t.signals.size(); ++s) {
    Bytes x(16, 0);
    for (const SlotTerm& term : t.terms[s]) {
      EXPECT_EQ(term.file, demand[term.user]);
      const auto pk = lib.packet(term.file, term.row);
      for (std::size_t b = 0; b < x.size(); ++b) x[b] ^= pk[b];
    }
    EXPECT_EQ(t.signals[s], x);
  }
}

TEST(Deliver, EndToEndFourUserArray) {
  const Pda p = FourUserArray();
  const FileLibrary lib = FileLibrary::Random(4, 6, 32, 3);
  const CacheContents caches = Place(p, lib);
  const std::vector<std::size_t> demand = {0, 1, 2, 3};
  const SimulationTranscript t = Deliver(p, lib, demand);
  DecodeResult r = Decode(p, caches, t, demand);
  CheckAgainstLibrary(lib, demand, r);
  EXPECT_TRUE(r.ok());
  ASSERT_EQ(r.files.size(), 4u);
  for (std::size_t u = 0; u < 4; ++u) {
    for (std::size_t j = 0; j < 6; ++j) {
      const auto pk = lib.packet(demand[u], j);
      EXPECT_TRUE(std::equal(pk.begin(), pk.end(),
                             r.files[u].begin() + j * 32));
    }
  }
}

TEST(Place, CacheContents) {
  const Pda p = FourUserArray();
  const CacheContents c = Place(p, FileLibrary::Random(4, 6));
  EXPECT_EQ(c.rows(0), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(c.rows(1), (std::vector<std::size_t>{0, 3, 4}));
  EXPECT_EQ(c.rows(2), (std::vector<std::size_t>{1, 3, 5}));
  EXPECT_EQ(c.rows(3), (std::vector<std::size_t>{2, 4, 5}));
  EXPECT_EQ(c.size(0), 12u);
  EXPECT_TRUE(c.Has(2, 3, 5));
  EXPECT_FALSE(c.Has(2, 3, 0));
  EXPECT_TRUE(c.Get(2, 3, 0).empty());
  EXPECT_THROW(Place(p, FileLibrary::Random(4, 5)), Error);
}

TEST(Place, AllStarsNeedsNoDelivery) {
  const Pda p = Pda::AllStars(3, 2);
  const FileLibrary lib = FileLibrary::Random(2, 3);
  const std::vector<std::size_t> demand = {1, 0};
  const SimulationTranscript t = Deliver(p, lib, demand);
  EXPECT_TRUE(t.signals.empty());
  DecodeResult r = Decode(p, Place(p, lib), t, demand);
  CheckAgainstLibrary(lib, demand, r);
  EXPECT_TRUE(r.ok());
}

TEST(Deliver, MnSlotsCombineTPlusOneUsers) {
  const Pda p = BuildMn({4, 2});
  const std::vector<std::size_t> demand = {0, 1, 2, 3};
  const SimulationTranscript t =
      Deliver(p, FileLibrary::Random(4, 6), demand);
  ASSERT_EQ(t.terms.size(), 4u);
  for (const auto& slot : t.terms) EXPECT_EQ(slot.size(), 3u);
}

TEST(Deliver, Errors) {
  const Pda p = FourUserArray();
  const FileLibrary lib = FileLibrary::Random(4, 6);
  const std::vector<std::size_t> short_demand = {0, 1};
  const std::vector<std::size_t> bad_file = {0, 1, 2, 4};
  EXPECT_THROW(Deliver(p, lib, short_demand), Error);
  EXPECT_THROW(Deliver(p, lib, bad_file), Error);
}

TEST(Decode, BrokenArrayFails) {
  const Pda p = ReadPdaFile(testing::Fixture("broken.pda"));
  EXPECT_FALSE(VerifyDecodability(p).empty());
  EXPECT_TRUE(VerifyDecodability(FourUserArray()).empty());
  const SweepSummary s = DemandSweep(p, 4);
  EXPECT_GT(s.failed_demands, 0u);
  ASSERT_TRUE(s.first_failure.has_value());
  EXPECT_FALSE(s.first_failure->Describe().empty());
  ASSERT_TRUE(s.first_failed_demand.has_value());
}

TEST(Decode, EveryCrossEntryMutationIsCaught) {
  const Pda base = FourUserArray();
  for (std::size_t i = 0; i < base.rows(); ++i) {
    for (std::size_t j = 0; j < base.cols(); ++j) {
      if (!base.at(i, j).is_star()) continue;
      for (Symbol s = 0; s < 4; ++s) {
        const Pda m = base.WithEntry({i, j}, Entry::Of(s));
        const bool valid = Validate(m).ok();
        EXPECT_EQ(VerifyDecodability(m).empty(), valid);
        if (!valid) {
          EXPECT_GT(DemandSweep(m, 4).failed_demands, 0u);
        }
      }
    }
  }
}

TEST(Sweep, ExhaustiveFourUserArray) {
  const SweepSummary s = DemandSweep(FourUserArray(), 6);
  EXPECT_EQ(s.demands, 1296u);
  EXPECT_EQ(s.failed_demands, 0u);
  EXPECT_TRUE(s.constant_slot_count);
  EXPECT_EQ(s.slots, 4u);
  EXPECT_EQ(s.rate, MakeRational(2, 3));
}

TEST(Sweep, SampledP2) {
  SweepOptions o = ParseSweepMode("sampled:200");
  o.seed = 5;
  const SweepSummary s = DemandSweep(BuildP2({5, 2}), 10, o);
  EXPECT_EQ(s.demands, 200u);
  EXPECT_EQ(s.failed_demands, 0u);
  EXPECT_EQ(s.rate, Rational(2));
}

TEST(Sweep, SingleFile) {
  const SweepSummary s = DemandSweep(BuildMn({4, 2}), 1);
  EXPECT_EQ(s.demands, 1u);
  EXPECT_EQ(s.failed_demands, 0u);
}

TEST(Sweep, ParallelMatchesSerial) {
  const Pda p = ReadPdaFile(testing::Fixture("broken.pda"));
  for (const char* mode : {"exhaustive", "sampled:64"}) {
    SweepOptions o = ParseSweepMode(mode);
    o.seed = 11;
    const SweepSummary a = DemandSweep(p, 5, o);
    const SweepSummary b = DemandSweepSerial(p, 5, o);
    EXPECT_EQ(a.demands, b.demands);
    EXPECT_EQ(a.failed_demands, b.failed_demands);
    EXPECT_EQ(a.first_failed_demand, b.first_failed_demand);
    EXPECT_EQ(a.slots, b.slots);
  }
}

TEST(Sweep, Errors) {
  EXPECT_THROW(DemandSweep(BuildMn({6, 3}), 6), Error);
  EXPECT_THROW(ParseSweepMode("sampled:"), Error);
  EXPECT_THROW(ParseSweepMode("random"), Error);
  EXPECT_EQ(ParseSweepMode("exhaustive").mode, SweepMode::kExhaustive);
  EXPECT_EQ(ParseSweepMode("sampled:7").samples, 7u);
}

}  // namespace
}  // namespace pdakit
