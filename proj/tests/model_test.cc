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

#include <filesystem>
#include <numeric>
#include <stdexcept>

#include <gtest/gtest.h>

#include "abclab/errors.h"
#include "abclab/generators.h"
#include "abclab/instance.h"
#include "test_util.h"

namespace abclab {
namespace {

using testing::InstanceGen;

TEST(InstanceTest, ConstructionChecks) {
  EXPECT_THROW(ElectionInstance(3, 0, {{0}}), std::invalid_argument);
  EXPECT_THROW(ElectionInstance(3, 4, {{0}}), std::invalid_argument);
  EXPECT_THROW(ElectionInstance(3, 1, {}), std::invalid_argument);
  EXPECT_THROW(ElectionInstance(3, 1, {{3}}), std::invalid_argument);
  EXPECT_THROW(ElectionInstance(3, 1, {{1, 1}}), std::invalid_argument);
  // Empty ballots are fine; ballots are sorted on entry.
  const ElectionInstance e(3, 2, {{}, {2, 0}});
  EXPECT_EQ(e.ballot(1), (Ballot{0, 2}));
  EXPECT_EQ(e.SeatPrice(), Rational(1));
}

TEST(InstanceTest, Approvers) {
  const ElectionInstance e = Fixture(FixtureId::kExample21);
  std::vector<Voter> first12(12), last10(10);
  std::iota(first12.begin(), first12.end(), 0);
  std::iota(last10.begin(), last10.end(), 5);
  EXPECT_EQ(e.approvers(0), first12);
  EXPECT_EQ(e.approvers(3), last10);
  const ElectionInstance lonely(2, 1, {{0}});
  EXPECT_TRUE(lonely.approvers(1).empty());
  EXPECT_THROW(lonely.approvers(2), std::out_of_range);
}

TEST(CommitteeTest, ParseAndRender) {
  const Committee w = Committee::Parse("5,1,2,4");
  EXPECT_EQ(w.ToString(), "1,2,4,5");
  EXPECT_TRUE(w.Contains(0));
  EXPECT_FALSE(w.Contains(2));
  EXPECT_TRUE(Committee::Parse("").empty());
  EXPECT_THROW(Committee::Parse("0"), std::invalid_argument);
  EXPECT_THROW(Committee::Parse("1,1"), std::invalid_argument);
  EXPECT_THROW(Committee::Parse("x"), std::invalid_argument);
}

TEST(CommitteeTest, ValidateAgainstInstance) {
  const ElectionInstance e(3, 2, {{0, 1}});
  EXPECT_NO_THROW(ValidateCommittee(e, Committee{0, 2}));
  EXPECT_THROW(ValidateCommittee(e, Committee{3}), std::out_of_range);
}

TEST(WelfareTest, IntroCommittees) {
  const ElectionInstance intro = Fixture(FixtureId::kIntro);
  EXPECT_EQ(ComputeWelfare(intro, Committee::Parse("1,2,3,7,8,9,10,11,12,13,14,15")),
            (WelfareVector{3, 3, 3, 3, 3, 3}));
  // Committees below k are first-class.
  EXPECT_EQ(ComputeWelfare(intro, Committee{0}),
            (WelfareVector{1, 1, 1, 0, 0, 0}));
}

TEST(RestrictTest, Examples) {
  const ElectionInstance intro = Fixture(FixtureId::kIntro);
  std::vector<Voter> all(intro.num_voters());
  std::iota(all.begin(), all.end(), 0);
  EXPECT_EQ(RestrictProfile(intro, all, intro.committee_size()), intro);

  const std::vector<Voter> s{0, 1, 2};
  const ElectionInstance three = RestrictProfile(intro, s, 6);
  EXPECT_EQ(three.num_voters(), 3);
  EXPECT_EQ(three.committee_size(), 6);
  EXPECT_EQ(three.num_candidates(), 15);

  const std::vector<Voter> v4{3};
  const ElectionInstance single = RestrictProfile(intro, v4, 2);
  EXPECT_EQ(single.ballot(0), (Ballot{6, 7, 8}));

  EXPECT_THROW(RestrictProfile(intro, std::vector<Voter>{}, 1),
               std::invalid_argument);
}

TEST(FormatTest, ParseErrorsCarryLines) {
  try {
    ParseInstance("3 2 1\n1 2\n4\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_THROW(ParseInstance(""), ParseError);
  EXPECT_THROW(ParseInstance("3 2 1\n1\n"), ParseError);  // missing ballot
  EXPECT_THROW(ParseInstance("3 1 1\n2 1\n"), ParseError);  // not increasing
  EXPECT_THROW(ReadInstanceFile("/nonexistent/instance.txt"), ParseError);
}

TEST(FormatTest, CommentsAndEmptyBallots) {
  const ElectionInstance e = ParseInstance("# header\n3 2 1\n\n1 3\n");
  EXPECT_TRUE(e.ballot(0).empty());
  EXPECT_EQ(e.ballot(1), (Ballot{0, 2}));
}

TEST(FormatTest, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "abclab_rt.txt";
  const ElectionInstance e = Fixture(FixtureId::kExample22);
  WriteInstanceFile(e, path);
  EXPECT_EQ(ReadInstanceFile(path), e);
  std::filesystem::remove(path);
}

TEST(DigestTest, StableAndSensitive) {
  const ElectionInstance a(3, 1, {{0}, {1, 2}});
  const ElectionInstance b(3, 1, {{0}, {1}});
  EXPECT_EQ(InstanceDigest(a), InstanceDigest(ParseInstance(SerializeInstance(a))));
  EXPECT_NE(InstanceDigest(a), InstanceDigest(b));
  EXPECT_EQ(InstanceDigest(a).size(), 16u);
}

// parse(serialize(x)) == x, welfare monotone in the committee, and total
// welfare equals the summed approval counts of the members.
TEST(ModelProperties, RandomInstances) {
  InstanceGen gen(101);
  for (int trial = 0; trial < 300; ++trial) {
    const ElectionInstance e = gen.Next(10, 10, 6);
    ASSERT_EQ(ParseInstance(SerializeInstance(e)), e);
    const int m = e.num_candidates();
    std::uint32_t small = 0, large = 0;
    for (Candidate c = 0; c < m; ++c) {
      const int roll = gen.Uniform(0, 2);
      if (roll == 0) small |= 1u << c;
      if (roll <= 1) large |= 1u << c;
    }
    const Committee ws(testing::Members(small, m));
    const Committee wl(testing::Members(large, m));
    const WelfareVector a = ComputeWelfare(e, ws), b = ComputeWelfare(e, wl);
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_LE(a[i], b[i]);
    long total = std::accumulate(b.begin(), b.end(), 0L);
    long approvals = 0;
    for (Candidate c : wl) approvals += static_cast<long>(e.approvers(c).size());
    EXPECT_EQ(total, approvals);
  }
}

}  // namespace
}  // namespace abclab
