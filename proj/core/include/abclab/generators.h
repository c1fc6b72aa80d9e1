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

#ifndef ABCLAB_GENERATORS_H_
#define ABCLAB_GENERATORS_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "abclab/instance.h"
#include "abclab/rational.h"

namespace abclab {

enum class FixtureId {
  kIntro,
  kPhragmen1899,
  kExample21,
  kExample22,
  kExample31,
  kExample32,
  kExample33,
  kExample41,
  kThm32Instance1,
  kThm32Instance2,
  kFig2Profile1,
  kFig2Profile2,
  kFig3,
  kFig4Profile1,
  kFig4Profile2,
  kFig4Profile3,
  kPropB1,
  kOverlappingParties,
  kRemarkA1,
};

std::string_view ToString(FixtureId id);
// Throws std::invalid_argument for unknown names.
FixtureId FixtureIdFromName(std::string_view name);
std::vector<FixtureId> AllFixtures();

ElectionInstance Fixture(FixtureId id);

// Committees drawn in the figures that accompany a fixture, by label
// (e.g. "a" and "b" for the introduction). Empty when there are none.
std::vector<std::pair<std::string, Committee>> FixtureCommittees(FixtureId id);

struct PartyListInstance {
  ElectionInstance instance;
  std::vector<int> party_sizes;
  bool integral;  // k·n_z/n is whole for every party z
};

// Party z gets voter_counts[z] voters and candidates_per_party[z] candidates;
// voters and candidates are numbered party by party.
PartyListInstance GeneratePartyList(std::span<const int> voter_counts,
                                    std::span<const int> candidates_per_party,
                                    int k);

// A random laminar derivation with at most `max_depth` levels and
// `max_voters` voters. Deterministic per seed.
ElectionInstance GenerateLaminar(std::uint64_t seed, int max_depth,
                                 int max_voters, int k);

// x voters share y common candidates and hold y private ones each; y·x more
// voters hold y private candidates each. k = y²x + y. Needs x >= y², y >= 2.
ElectionInstance GeneratePigouDaltonCoreFamily(int x, int y);

struct RuleXLowerBound {
  ElectionInstance instance;
  int scale;                             // L = n/k
  std::vector<std::vector<Voter>> groups;  // S_1, ..., S_x
  std::vector<Voter> coalition;          // S_1 ∪ ... ∪ S_x
  std::vector<Candidate> alternative;    // R, x^x candidates
};

// Smallest L accepted by GenerateRuleXCoreLowerBound for this x.
int MinimalLowerBoundScale(int x);

// Groups S_1..S_x of L·x^(x-1) voters; each voter of S_i approves a cyclic
// block of x^i candidates of R, so every candidate of R gets L·x^(i-1)
// approvals from S_i. Block candidates that drain the groups' budgets level
// by level get lower indices than R. Throws std::invalid_argument below the
// minimal L or when the instance would not fit in memory.
RuleXLowerBound GenerateRuleXCoreLowerBound(int x, int scale);

// Voter-major: one std::mt19937_64 draw u per (voter, candidate) pair; the
// voter approves iff u < floor(density · 2^64). Portable across platforms.
ElectionInstance GenerateRandom(std::uint64_t seed, int n, int m, int k,
                                const Rational& density);

}  // namespace abclab

#endif  // ABCLAB_GENERATORS_H_
