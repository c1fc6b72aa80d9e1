// Copyright 2026 The abclab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <gtest/gtest.h>

#include "abclab/generators.h"
#include "abclab/laminar.h"
#include "abclab/rules.h"

namespace abclab {
namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// The shipped fixtures/ files are exactly what the generators print.
TEST(FixtureTest, FilesAreByteIdentical) {
  for (FixtureId id : AllFixtures()) {
    const std::string name(ToString(id));
    const std::string path =
        std::string(ABCLAB_SOURCE_DIR) + "/fixtures/" + name + ".txt";
    EXPECT_EQ(ReadFile(path), SerializeInstance(Fixture(id))) << name;
    EXPECT_EQ(FixtureIdFromName(name), id);
  }
  EXPECT_THROW(FixtureIdFromName("example99"), std::invalid_argument);
}

TEST(FixtureTest, Shapes) {
  const ElectionInstance e21 = Fixture(FixtureId::kExample21);
  EXPECT_EQ(e21.num_voters(), 15);
  EXPECT_EQ(e21.committee_size(), 4);
  const ElectionInstance pb1 = Fixture(FixtureId::kPropB1);
  EXPECT_EQ(pb1.num_voters(), 160);
  EXPECT_EQ(pb1.committee_size(), 20);
  // Phragmén's 1899 profile: a has 4000 approvers, each b 3000, each c 1000.
  const ElectionInstance p1899 = Fixture(FixtureId::kPhragmen1899);
  EXPECT_EQ(p1899.approvers(0).size(), 4000u);
  EXPECT_EQ(p1899.approvers(1).size(), 3000u);
  EXPECT_EQ(p1899.approvers(5).size(), 1000u);
}

// Oracle for the documented mapping: one mt19937_64 draw per (voter,
// candidate), voter-major, approve iff the draw is below density·2^64.
TEST(GenerateRandomTest, MatchesDocumentedMapping) {
  for (std::uint64_t seed : {1ULL, 42ULL, 977ULL}) {
    const ElectionInstance e = GenerateRandom(seed, 5, 7, 2, Rational(1, 4));
    std::mt19937_64 rng(seed);
    for (Voter v = 0; v < 5; ++v) {
      for (Candidate c = 0; c < 7; ++c) {
        EXPECT_EQ(e.Approves(v, c), rng() < (1ULL << 62));
      }
    }
  }
}

TEST(GenerateRandomTest, GoldenFile) {
  const std::string golden = ReadFile(std::string(ABCLAB_SOURCE_DIR) +
                                      "/tests/golden/gen_random_s42_n6_m8_k3_half.txt");
  EXPECT_EQ(SerializeInstance(GenerateRandom(42, 6, 8, 3, Rational(1, 2))),
            golden);
}

TEST(GenerateRandomTest, ExtremesAndErrors) {
  const ElectionInstance full = GenerateRandom(3, 4, 5, 2, Rational(1));
  const ElectionInstance empty = GenerateRandom(3, 4, 5, 2, Rational(0));
  for (Voter v = 0; v < 4; ++v) {
    EXPECT_EQ(full.ballot(v).size(), 5u);
    EXPECT_TRUE(empty.ballot(v).empty());
  }
  EXPECT_EQ(GenerateRandom(9, 6, 6, 3, Rational(1, 3)),
            GenerateRandom(9, 6, 6, 3, Rational(1, 3)));
  EXPECT_THROW(GenerateRandom(1, 3, 2, 3, Rational(1, 2)), std::invalid_argument);
  EXPECT_THROW(GenerateRandom(1, 3, 2, 1, Rational(3, 2)), std::invalid_argument);
  EXPECT_THROW(GenerateRandom(1, 0, 2, 1, Rational(1, 2)), std::invalid_argument);
}

TEST(GenerateLaminarTest, AlwaysLaminar) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int k = 1 + static_cast<int>(seed % 7);
    const ElectionInstance e = GenerateLaminar(seed, 1 + seed % 4, 14, k);
    ASSERT_TRUE(CheckLaminar(e).has_value()) << "seed " << seed << "\n"
                                             << SerializeInstance(e);
    EXPECT_EQ(e, GenerateLaminar(seed, 1 + seed % 4, 14, k));
  }
  EXPECT_THROW(GenerateLaminar(1, 3, 10, 0), std::invalid_argument);
}

TEST(GenerateLaminarTest, DepthOneIsUnanimous) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ElectionInstance e = GenerateLaminar(seed, 1, 8, 3);
    for (const Ballot& b : e.ballots()) EXPECT_EQ(b, e.ballot(0));
  }
}

TEST(GenerateLaminarTest, DepthThreePhragmenProportional) {
  const ElectionInstance e = GenerateLaminar(2024, 3, 12, 6);
  EXPECT_TRUE(CheckLaminarProportional(e, PhragmenSequential(e).committee()));
}

// Integral party lists are laminar; the others are not.
TEST(GeneratePartyListTest, IntegralityMatchesLaminarity) {
  std::mt19937_64 rng(71);
  std::uniform_int_distribution<int> parties(1, 4), voters(1, 6), seats(1, 6);
  int integral = 0, fractional = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int z = parties(rng);
    const int k = seats(rng);
    std::vector<int> sizes(z), candidates(z, k);
    for (int& s : sizes) s = voters(rng);
    const PartyListInstance p = GeneratePartyList(sizes, candidates, k);
    EXPECT_EQ(p.integral, CheckLaminar(p.instance).has_value())
        << SerializeInstance(p.instance);
    (p.integral ? integral : fractional)++;
  }
  EXPECT_GT(integral, 30);
  EXPECT_GT(fractional, 30);
}

TEST(FamilyTest, PigouDaltonCoreFamily) {
  const ElectionInstance e = GeneratePigouDaltonCoreFamily(4, 2);
  EXPECT_EQ(e.num_voters(), 12);
  EXPECT_EQ(e.num_candidates(), 26);
  EXPECT_EQ(e.committee_size(), 18);
  EXPECT_EQ(Rational(e.committee_size() * 4, e.num_voters()), Rational(6));
  EXPECT_EQ(GeneratePigouDaltonCoreFamily(9, 3).committee_size(), 84);
  EXPECT_THROW(GeneratePigouDaltonCoreFamily(3, 2), std::invalid_argument);
  EXPECT_THROW(GeneratePigouDaltonCoreFamily(4, 1), std::invalid_argument);
}

// For each level l some voter of S_l holds (x^l - 1)/(x - 1) members of Rule
// X's committee while R offers them x^l candidates.
TEST(FamilyTest, RuleXLowerBoundLevels) {
  for (int x : {2, 3}) {
    const int scale = MinimalLowerBoundScale(x);
    const RuleXLowerBound bound = GenerateRuleXCoreLowerBound(x, scale);
    const ElectionInstance& e = bound.instance;
    EXPECT_EQ(e.SeatPrice(), Rational(scale));
    int power = 1;
    for (int i = 0; i < x; ++i) power *= x;
    EXPECT_EQ(static_cast<int>(bound.alternative.size()), power);
    const WelfareVector welfare = ComputeWelfare(e, RuleX(e).committee());
    int level_power = 1;
    for (int l = 1; l <= x; ++l) {
      level_power *= x;
      const int reps = (level_power - 1) / (x - 1);
      const auto& group = bound.groups[l - 1];
      int group_size = scale;
      for (int i = 1; i < x; ++i) group_size *= x;
      EXPECT_EQ(static_cast<int>(group.size()), group_size);
      bool seen = false;
      for (Voter v : group) {
        int offered = 0;
        for (Candidate c : bound.alternative) offered += e.Approves(v, c) ? 1 : 0;
        seen = seen || (welfare[v] == reps && offered == level_power);
      }
      EXPECT_TRUE(seen) << "x=" << x << " level " << l;
    }
  }
  EXPECT_THROW(GenerateRuleXCoreLowerBound(2, 0), std::invalid_argument);
  EXPECT_THROW(MinimalLowerBoundScale(1), std::invalid_argument);
}

}  // namespace
}  // namespace abclab
