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

#include <stdexcept>

#include <gtest/gtest.h>

#include "abclab/generators.h"
#include "abclab/laminar.h"
#include "abclab/rules.h"
#include "suites.h"
#include "test_util.h"

namespace abclab {
namespace {

Committee Labeled(FixtureId id, const std::string& label) {
  for (const auto& [name, w] : FixtureCommittees(id)) {
    if (name == label) return w;
  }
  throw std::logic_error(label);
}

TEST(LaminarTest, DrawnExamples) {
  for (FixtureId id :
       {FixtureId::kExample31, FixtureId::kExample32, FixtureId::kExample33}) {
    const ElectionInstance e = Fixture(id);
    ASSERT_TRUE(CheckLaminar(e)) << ToString(id);
    EXPECT_TRUE(CheckLaminarProportional(e, Labeled(id, "green")));
  }
  const ElectionInstance e32 = Fixture(FixtureId::kExample32);
  EXPECT_FALSE(CheckLaminarProportional(e32, Labeled(FixtureId::kExample32, "pav")));
}

TEST(LaminarTest, Example31Tree) {
  const auto tree = CheckLaminar(Fixture(FixtureId::kExample31));
  ASSERT_TRUE(tree);
  const LaminarNode& root = tree->root;
  EXPECT_EQ(root.kind, LaminarNode::Kind::kSplit);
  ASSERT_EQ(root.children.size(), 3u);
  EXPECT_EQ(root.children[0].seats, 3);
  EXPECT_EQ(root.children[2].seats, 2);
}

TEST(LaminarTest, IntroCommittees) {
  const ElectionInstance intro = Fixture(FixtureId::kIntro);
  EXPECT_TRUE(CheckLaminarProportional(intro, Labeled(FixtureId::kIntro, "a")));
  EXPECT_FALSE(CheckLaminarProportional(intro, Labeled(FixtureId::kIntro, "b")));
}

TEST(LaminarTest, RejectsNonLaminar) {
  // Overlapping approvals that no derivation can produce.
  const ElectionInstance e(3, 2, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_FALSE(CheckLaminar(e));
  EXPECT_THROW(CheckLaminarProportional(e, Committee{0, 1}),
               std::invalid_argument);
  const std::vector<int> voters{1, 2}, candidates{2, 2};
  EXPECT_FALSE(CheckLaminar(GeneratePartyList(voters, candidates, 2).instance));
}

// Every accepted instance has a laminar approver-set family; every listed
// committee is laminar proportional and the list is complete.
TEST(LaminarTest, AcceptedInstancesAndEnumeration) {
  testing::InstanceGen gen(97);
  int accepted = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const ElectionInstance e =
        seed % 2 == 0 ? GenerateLaminar(seed, 3, 10, 1 + seed % 5)
                      : gen.Next(5, 6, 3);
    const auto tree = CheckLaminar(e);
    if (!tree) continue;
    ++accepted;
    EXPECT_TRUE(ApproverSetsLaminar(e)) << SerializeInstance(e);
    if (e.num_candidates() > 16) continue;
    const auto listed = LaminarProportionalCommittees(*tree);
    std::vector<Committee> brute;
    testing::ForEachSubset(e.num_candidates(), e.committee_size(),
                           [&](std::uint32_t mask) {
                             const Committee w(
                                 testing::Members(mask, e.num_candidates()));
                             if (IsLaminarProportional(*tree, w)) brute.push_back(w);
                           });
    std::sort(brute.begin(), brute.end());
    EXPECT_EQ(listed, brute) << SerializeInstance(e);
  }
  EXPECT_GT(accepted, 75);
}

TEST(LaminarTest, PhragmenAndRuleXSuite) {
  const lab::SuiteResult result = lab::RunLaminarSuite(13, 60);
  EXPECT_TRUE(result.ok()) << result.first_failure;
}

TEST(LaminarTest, UniqueCommitteeWelfare) {
  const ElectionInstance two = Fixture(FixtureId::kThm32Instance2);
  const auto tree = CheckLaminar(two);
  ASSERT_TRUE(tree);
  const auto unique = LaminarProportionalCommittees(*tree);
  ASSERT_EQ(unique.size(), 1u);
  EXPECT_EQ(ComputeWelfare(two, unique[0]),
            (WelfareVector{7, 7, 7, 7, 5, 5, 5, 5}));
}

}  // namespace
}  // namespace abclab
