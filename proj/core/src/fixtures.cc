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

#include <algorithm>
#include <array>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>

#include "abclab/generators.h"

namespace abclab {
namespace {

// Candidates and voters below are written 1-based to match the figures.
class ProfileBuilder {
 public:
  explicit ProfileBuilder(int num_voters) : ballots_(num_voters) {}

  // Candidate c (1-based) approved by voters first..last (1-based).
  ProfileBuilder& Approve(int c, int first, int last) {
    for (int v = first; v <= last; ++v) ballots_[v - 1].push_back(c - 1);
    return *this;
  }
  ProfileBuilder& ApproveRange(int c_first, int c_last, int first, int last) {
    for (int c = c_first; c <= c_last; ++c) Approve(c, first, last);
    return *this;
  }
  ProfileBuilder& ApproveVoters(int c, std::initializer_list<int> voters) {
    for (int v : voters) ballots_[v - 1].push_back(c - 1);
    return *this;
  }

  ElectionInstance Build(int m, int k) {
    return ElectionInstance(m, k, std::move(ballots_));
  }

 private:
  std::vector<Ballot> ballots_;
};

// 1-based committee literal helpers.
Committee Members(std::initializer_list<int> one_based) {
  std::vector<Candidate> out;
  for (int c : one_based) out.push_back(c - 1);
  return Committee(std::move(out));
}

Committee RangeExcept(int first, int last, std::initializer_list<int> skip) {
  std::vector<Candidate> out;
  for (int c = first; c <= last; ++c) {
    if (std::find(skip.begin(), skip.end(), c) == skip.end()) {
      out.push_back(c - 1);
    }
  }
  return Committee(std::move(out));
}

ElectionInstance Intro() {
  ProfileBuilder b(6);
  b.ApproveRange(1, 3, 1, 3);
  b.Approve(4, 1, 1).Approve(5, 2, 2).Approve(6, 3, 3);
  b.ApproveRange(7, 9, 4, 4).ApproveRange(10, 12, 5, 5);
  b.ApproveRange(13, 15, 6, 6);
  return b.Build(15, 12);
}

ElectionInstance Phragmen1899() {
  ProfileBuilder b(4000);
  b.Approve(1, 1, 4000);
  b.ApproveRange(2, 5, 1, 3000);
  b.ApproveRange(6, 9, 3001, 4000);
  return b.Build(9, 5);
}

// Voters 1-10 hold c1-c3, voters 6-15 hold c4-c5, voters 11-12 also hold
// c1-c2.
ElectionInstance Example21() {
  ProfileBuilder b(15);
  b.ApproveRange(1, 2, 1, 12);
  b.Approve(3, 1, 10);
  b.ApproveRange(4, 5, 6, 15);
  return b.Build(5, 4);
}

ElectionInstance Example31() {
  ProfileBuilder b(8);
  b.ApproveRange(1, 5, 1, 3).ApproveRange(6, 10, 4, 6);
  b.ApproveRange(11, 15, 7, 8);
  return b.Build(15, 8);
}

ElectionInstance Example32() {
  ProfileBuilder b(6);
  b.Approve(1, 1, 6).ApproveRange(2, 4, 1, 4).ApproveRange(5, 8, 5, 6);
  return b.Build(8, 4);
}

ElectionInstance Example33() {
  ProfileBuilder b(9);
  b.ApproveRange(1, 4, 1, 6).ApproveRange(5, 6, 1, 3);
  b.ApproveRange(7, 10, 4, 6).Approve(11, 7, 9);
  b.ApproveRange(12, 17, 7, 8).ApproveRange(18, 20, 9, 9);
  return b.Build(20, 12);
}

ElectionInstance Example41() {
  ProfileBuilder b(4);
  for (int v = 1; v <= 4; ++v) b.Approve(v, v, v);
  b.ApproveRange(5, 8, 1, 4);
  return b.Build(8, 4);
}

ElectionInstance Thm32Instance1() {
  ProfileBuilder b(8);
  b.ApproveRange(1, 2, 1, 4).ApproveRange(3, 4, 5, 8);
  b.ApproveRange(5, 9, 1, 2).ApproveRange(10, 14, 3, 4);
  b.ApproveRange(15, 18, 5, 6).ApproveRange(19, 22, 7, 8);
  return b.Build(22, 20);
}

ElectionInstance Thm32Instance2() {
  ProfileBuilder b(8);
  b.ApproveRange(1, 6, 1, 4).ApproveRange(7, 11, 5, 6);
  b.ApproveRange(12, 16, 7, 8);
  for (int v = 1; v <= 8; ++v) b.Approve(16 + v, v, v);
  return b.Build(24, 20);
}

// Six voters share c1-c3 and hold 54 private candidates each; six voters hold
// 57 private candidates each. Profile 2 swaps the two halves.
ElectionInstance Fig2(bool swapped) {
  ProfileBuilder b(12);
  const int shared_first = swapped ? 7 : 1;
  b.ApproveRange(1, 3, shared_first, shared_first + 5);
  int next = 4;
  for (int v = 1; v <= 12; ++v) {
    const bool shares = v >= shared_first && v < shared_first + 6;
    const int count = shares ? 54 : 57;
    b.ApproveRange(next, next + count - 1, v, v);
    next += count;
  }
  return b.Build(next - 1, 57);
}

// 16 voters; c1-c4 are singles of v1-v4 and c5-c10 are shared by v1-v4.
// Each later pair shares five candidates and holds one single each. c53 and
// c54 are approved by nobody.
ElectionInstance Fig4Profile1() {
  ProfileBuilder b(16);
  for (int v = 1; v <= 4; ++v) b.Approve(v, v, v);
  b.ApproveRange(5, 10, 1, 4);
  int next = 11;
  for (int pair = 0; pair < 6; ++pair) {
    const int first = 5 + 2 * pair;
    b.ApproveRange(next, next + 4, first, first + 1);
    b.Approve(next + 5, first, first).Approve(next + 6, first + 1, first + 1);
    next += 7;
  }
  return b.Build(54, 48);
}

// Pairs of voters with 7, 6, 6, ... shared candidates (c1-c49). Profile 2
// adds c50 for {v6, v7}; both add a single for v15 and dummies up to m.
ElectionInstance Fig4Profile23(bool bridge) {
  ProfileBuilder b(16);
  b.ApproveRange(1, 7, 1, 2);
  int next = 8;
  for (int pair = 1; pair < 8; ++pair) {
    b.ApproveRange(next, next + 5, 2 * pair + 1, 2 * pair + 2);
    next += 6;
  }
  if (bridge) b.ApproveVoters(next++, {6, 7});
  b.Approve(next++, 15, 15);
  return b.Build(bridge ? 54 : 53, 48);
}

ElectionInstance PropB1() {
  ProfileBuilder b(160);
  b.ApproveRange(1, 7, 1, 56).ApproveRange(8, 14, 57, 112);
  for (int g = 1; g <= 6; ++g) {
    const int first = 113 + 8 * (g - 1);
    b.Approve(14 + g, first, first + 7);
  }
  b.ApproveRange(21, 28, 1, 40).ApproveRange(29, 36, 57, 96);
  for (int h = 1; h <= 8; ++h) {
    const int first = 113 + 6 * (h - 1);
    b.Approve(20 + h, first, first + 5).Approve(28 + h, first, first + 5);
  }
  return b.Build(36, 20);
}

ElectionInstance OverlappingParties() {
  ProfileBuilder b(8);
  b.ApproveRange(1, 12, 1, 6).ApproveRange(13, 24, 5, 8);
  return b.Build(24, 12);
}

ElectionInstance RemarkA1() {
  ProfileBuilder b(18);
  b.Approve(1, 1, 2).Approve(2, 3, 4).Approve(3, 5, 6);
  b.ApproveRange(4, 8, 7, 18);
  return b.Build(8, 6);
}

constexpr std::array<std::pair<FixtureId, std::string_view>, 19> kNames = {{
    {FixtureId::kIntro, "intro"},
    {FixtureId::kPhragmen1899, "phragmen1899"},
    {FixtureId::kExample21, "example21"},
    {FixtureId::kExample22, "example22"},
    {FixtureId::kExample31, "example31"},
    {FixtureId::kExample32, "example32"},
    {FixtureId::kExample33, "example33"},
    {FixtureId::kExample41, "example41"},
    {FixtureId::kThm32Instance1, "thm32_instance1"},
    {FixtureId::kThm32Instance2, "thm32_instance2"},
    {FixtureId::kFig2Profile1, "fig2_profile1"},
    {FixtureId::kFig2Profile2, "fig2_profile2"},
    {FixtureId::kFig3, "fig3"},
    {FixtureId::kFig4Profile1, "fig4_profile1"},
    {FixtureId::kFig4Profile2, "fig4_profile2"},
    {FixtureId::kFig4Profile3, "fig4_profile3"},
    {FixtureId::kPropB1, "propB1"},
    {FixtureId::kOverlappingParties, "overlapping_parties"},
    {FixtureId::kRemarkA1, "remarkA1"},
}};

}  // namespace

std::string_view ToString(FixtureId id) {
  for (const auto& [key, name] : kNames) {
    if (key == id) return name;
  }
  throw std::invalid_argument("unknown fixture id");
}

FixtureId FixtureIdFromName(std::string_view name) {
  for (const auto& [key, known] : kNames) {
    if (known == name) return key;
  }
  throw std::invalid_argument("unknown fixture: " + std::string(name));
}

std::vector<FixtureId> AllFixtures() {
  std::vector<FixtureId> out;
  for (const auto& entry : kNames) out.push_back(entry.first);
  return out;
}

ElectionInstance Fixture(FixtureId id) {
  switch (id) {
    case FixtureId::kIntro:
    case FixtureId::kFig3:
      return Intro();
    case FixtureId::kPhragmen1899:
      return Phragmen1899();
    case FixtureId::kExample21:
    case FixtureId::kExample22:
      return Example21();
    case FixtureId::kExample31:
      return Example31();
    case FixtureId::kExample32:
      return Example32();
    case FixtureId::kExample33:
      return Example33();
    case FixtureId::kExample41:
      return Example41();
    case FixtureId::kThm32Instance1:
      return Thm32Instance1();
    case FixtureId::kThm32Instance2:
      return Thm32Instance2();
    case FixtureId::kFig2Profile1:
      return Fig2(false);
    case FixtureId::kFig2Profile2:
      return Fig2(true);
    case FixtureId::kFig4Profile1:
      return Fig4Profile1();
    case FixtureId::kFig4Profile2:
      return Fig4Profile23(true);
    case FixtureId::kFig4Profile3:
      return Fig4Profile23(false);
    case FixtureId::kPropB1:
      return PropB1();
    case FixtureId::kOverlappingParties:
      return OverlappingParties();
    case FixtureId::kRemarkA1:
      return RemarkA1();
  }
  throw std::invalid_argument("unknown fixture id");
}

std::vector<std::pair<std::string, Committee>> FixtureCommittees(FixtureId id) {
  switch (id) {
    case FixtureId::kIntro:
      return {{"a", Members({1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 13, 14})},
              {"b", Members({1, 2, 3, 7, 8, 9, 10, 11, 12, 13, 14, 15})}};
    case FixtureId::kPhragmen1899:
      return {{"pav", Members({1, 2, 3, 4, 5})},
              {"mixed", Members({1, 2, 3, 4, 6})}};
    case FixtureId::kExample21:
      return {{"phragmen", Members({1, 2, 4, 5})}};
    case FixtureId::kExample22:
      return {{"rulex", Members({1, 2, 3, 4})},
              {"rulex_c4_third", Members({1, 2, 4})}};
    case FixtureId::kExample31:
      return {{"green", Members({1, 2, 3, 6, 7, 8, 11, 12})}};
    case FixtureId::kExample32:
      return {{"green", Members({1, 2, 3, 5})}, {"pav", Members({1, 2, 3, 4})}};
    case FixtureId::kExample33:
      return {{"green", Members({1, 2, 3, 4, 5, 6, 7, 8, 11, 12, 13, 18})}};
    case FixtureId::kExample41:
      return {{"blue", Members({1, 2, 3, 4})}, {"green", Members({5, 6, 7, 8})}};
    case FixtureId::kThm32Instance1:
      return {{"blue", RangeExcept(1, 22, {9, 14})},
              {"green", RangeExcept(1, 22, {18, 22})}};
    case FixtureId::kThm32Instance2:
      return {{"blue", RangeExcept(1, 24, {21, 22, 23, 24})},
              {"green", RangeExcept(1, 24, {17, 18, 19, 20})}};
    case FixtureId::kFig4Profile2:
      return {{"colored",
               RangeExcept(1, 54, {13, 25, 43, 49, 53, 54})}};
    case FixtureId::kFig4Profile3:
      return {{"blue", RangeExcept(1, 53, {13, 43, 49, 52, 53})}};
    case FixtureId::kPropB1:
      return {{"C1", RangeExcept(1, 20, {})}, {"C2", RangeExcept(21, 36, {})}};
    default:
      return {};
  }
}

}  // namespace abclab
