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

// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.
//
// Tolerances are pinned below. Every numeric comparison is exact over
// rationals except the logarithmic core bound, a double compared without
// slack.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "abclab/axioms.h"
#include "abclab/generators.h"
#include "abclab/instance.h"
#include "abclab/laminar.h"
#include "abclab/rules.h"
#include "search.h"
#include "suites.h"

namespace abclab {
namespace {

using Clock = std::chrono::steady_clock;

// Pinned limits.
constexpr double kPavSeconds = 1.0;
constexpr double kIntroSeconds = 10.0;
constexpr double kSearchSeconds = 300.0;

// Seeds of the property suites. Criteria 7, 8 and 11 share one family.
constexpr std::uint64_t kPartyListSeed = 4201;
constexpr std::uint64_t kLaminarSeed = 3101;
constexpr std::uint64_t kRandomSeed = 5201;
constexpr int kSuiteSize = 200;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Times(const std::vector<Rational>& values) {
  std::string out;
  for (const Rational& v : values) out += (out.empty() ? "" : " ") + v.ToString();
  return out;
}

std::string Vector(const WelfareVector& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += (i > 0 ? "," : "") + std::to_string(values[i]);
  }
  return out + ")";
}

Committee Labeled(FixtureId id, const std::string& label) {
  for (const auto& [name, committee] : FixtureCommittees(id)) {
    if (name == label) return committee;
  }
  throw std::logic_error("no committee " + label);
}

std::string Summary(const lab::SuiteResult& result) {
  std::ostringstream out;
  out << result.instances << " instances, " << result.checks << " checks, "
      << result.failures << " failures";
  if (!result.ok()) out << "; first: " << result.first_failure;
  return out.str();
}

Outcome PavScores() {
  const auto start = Clock::now();
  const ElectionInstance instance = Fixture(FixtureId::kPhragmen1899);
  const Rational mixed = PavScore(instance, Committee::Parse("1,2,3,4,6"));
  const Rational pure = PavScore(instance, Committee::Parse("1,2,3,4,5"));
  const std::vector<Committee> winners = PavWinners(instance);
  const double seconds = Seconds(start);
  const bool shape = !winners.empty() &&
                     std::all_of(winners.begin(), winners.end(),
                                 [](const Committee& w) {
                                   return w.ToString() == "1,2,3,4,5";
                                 });
  std::ostringstream detail;
  detail << "scores " << mixed << "/" << pure << ", " << winners.size()
         << " winner(s), " << seconds << " s";
  return {mixed == Rational(7750) && pure == Rational(7850) && shape &&
              seconds < kPavSeconds,
          detail.str()};
}

Outcome PhragmenTimes() {
  const PhragmenTrace trace = PhragmenSequential(Fixture(FixtureId::kExample21));
  std::vector<Rational> expected{Rational(15, 48)};
  for (const Rational& step :
       {Rational(9, 32), Rational(25, 128), Rational(81, 256)}) {
    expected.push_back(expected.back() + step);
  }
  return {trace.election_times == expected &&
              trace.committee().ToString() == "1,2,4,5",
          "times " + Times(trace.election_times) + ", committee " +
              trace.committee().ToString()};
}

Outcome RuleXTraces() {
  const ElectionInstance instance = Fixture(FixtureId::kExample22);
  const RuleXTrace trace = RuleX(instance);
  RuleXOptions forced;
  forced.forced_picks[2] = 3;
  const RuleXTrace branch = RuleX(instance, forced);
  const std::vector<Rational> q{Rational(15, 48), Rational(15, 48),
                                Rational(15, 40), Rational(1)};
  // The forced branch must stop short: nothing else is affordable.
  const bool stops = branch.committee().ToString() == "1,2,4" &&
                     branch.q_values.size() == 3 && !branch.completed;
  return {trace.q_values == q && trace.committee().ToString() == "1,2,3,4" &&
              stops,
          "q " + Times(trace.q_values) + ", committee " +
              trace.committee().ToString() + ", forced branch " +
              branch.committee().ToString()};
}

Outcome IntroDichotomy() {
  const auto start = Clock::now();
  const ElectionInstance instance = Fixture(FixtureId::kIntro);
  const Committee a = Labeled(FixtureId::kIntro, "a");
  const Committee b = Labeled(FixtureId::kIntro, "b");
  const std::string phragmen =
      Vector(ComputeWelfare(instance, PhragmenSequential(instance).committee()));
  const std::string rule_x =
      Vector(ComputeWelfare(instance, RuleX(instance).committee()));
  bool pav_ok = true;
  for (const Committee& w : PavWinners(instance)) {
    pav_ok = pav_ok && Vector(ComputeWelfare(instance, w)) == "(3,3,3,3,3,3)";
  }
  const bool a_ok = CheckPriceable(instance, a).has_value() &&
                    CheckLaminarProportional(instance, a);
  const bool b_ok = !CheckPriceable(instance, b).has_value() &&
                    !CheckLaminarProportional(instance, b);
  const auto deviation = FindCoreDeviation(instance, b, Rational(1));
  const std::string coalition =
      deviation ? IndexList(deviation->coalition) : "none";
  const double seconds = Seconds(start);
  std::ostringstream detail;
  detail << "Phragmén " << phragmen << ", Rule X " << rule_x
         << ", core witness S=" << coalition << ", " << seconds << " s";
  return {phragmen == "(4,4,4,2,2,2)" && rule_x == "(4,4,4,2,2,2)" && pav_ok &&
              a_ok && b_ok && coalition == "1,2,3" && seconds < kIntroSeconds,
          detail.str()};
}

Outcome FromSuite(const lab::SuiteResult& result) {
  return {result.ok() && result.instances == kSuiteSize, Summary(result)};
}

Outcome PropB1() {
  const ElectionInstance instance = Fixture(FixtureId::kPropB1);
  const Committee c1 = Labeled(FixtureId::kPropB1, "C1");
  const Committee c2 = Labeled(FixtureId::kPropB1, "C2");
  const Committee w = RuleX(instance).committee();

  // S = V1' ∪ V2' ∪ V3.
  Deviation deviation;
  for (Voter v = 0; v < instance.num_voters(); ++v) {
    if (v < 40 || (v >= 56 && v < 96) || v >= 112) {
      deviation.coalition.push_back(v);
    }
  }
  deviation.alternative = c2.members();
  deviation.kind = DeviationKind::kPriceable;
  const bool blocks = VerifyDeviation(instance, w, deviation, Rational(1));

  const ElectionInstance restricted =
      RestrictProfile(instance, deviation.coalition, c2.size());
  PriceSystem system{Rational(8), {}};
  system.payments.resize(restricted.num_voters());
  for (Voter v = 0; v < restricted.num_voters(); ++v) {
    for (Candidate c : c2) {
      if (!restricted.Approves(v, c)) continue;
      system.payments[v][c] = v < 80 ? Rational(1, 8) : Rational(1, 2);
    }
  }
  const bool supported = SupportsCommittee(restricted, c2, system);
  const bool priceable =
      DeviationHasProperty(instance, deviation, DeviationProperty::kPriceable);
  return {w == c1 && blocks && supported && priceable,
          "Rule X " + std::string(w == c1 ? "= C1" : "!= C1") +
              ", deviation " + (blocks ? "verified" : "rejected") +
              ", 5 + 3 = 8 payments " + (supported ? "support" : "fail") +
              " C2"};
}

Outcome WelfareVectorPair() {
  const ElectionInstance one = Fixture(FixtureId::kThm32Instance1);
  const ElectionInstance two = Fixture(FixtureId::kThm32Instance2);
  const std::string w1 = "(6,6,6,6,6,6,6,6)";
  const std::string w2 = "(7,7,7,7,5,5,5,5)";
  const auto tree_one = CheckLaminar(one);
  const auto tree_two = CheckLaminar(two);
  if (!tree_one || !tree_two) return {false, "fixture not laminar"};
  std::set<std::string> induced;
  const auto all_one = LaminarProportionalCommittees(*tree_one);
  for (const Committee& w : all_one) {
    induced.insert(Vector(ComputeWelfare(one, w)));
  }
  const auto all_two = LaminarProportionalCommittees(*tree_two);
  const bool unique = all_two.size() == 1 &&
                      Vector(ComputeWelfare(two, all_two.front())) == w2;
  auto achieves = [&](FixtureId id, const ElectionInstance& instance) {
    std::set<std::string> seen;
    for (const auto& [label, w] : FixtureCommittees(id)) {
      seen.insert(Vector(ComputeWelfare(instance, w)));
    }
    return seen.count(w1) == 1 && seen.count(w2) == 1;
  };
  const bool achievable = achieves(FixtureId::kThm32Instance1, one) &&
                          achieves(FixtureId::kThm32Instance2, two);
  std::ostringstream detail;
  detail << all_one.size() << " laminar-proportional committees in instance 1"
         << ", " << all_two.size() << " in instance 2, both vectors "
         << (achievable ? "achieved" : "missing") << " in both";
  return {induced == std::set<std::string>{w1} && unique && achievable,
          detail.str()};
}

Outcome LowerBound() {
  const int x = 2;
  const int scale = MinimalLowerBoundScale(x);
  const RuleXLowerBound bound = GenerateRuleXCoreLowerBound(x, scale);
  const Committee w = RuleX(bound.instance).committee();
  const Deviation deviation{bound.coalition, bound.alternative,
                            DeviationKind::kLambdaCore};
  const bool verified = VerifyDeviation(bound.instance, w, deviation, Rational(1));
  const auto ratio = DeviationGainRatio(bound.instance, w, deviation);
  const bool ratio_ok = ratio && *ratio >= Rational(x - 1);

  std::string worst;
  const lab::SuiteResult suite =
      lab::RunRuleXCoreBoundSuite(kRandomSeed, kSuiteSize, &worst);
  std::ostringstream detail;
  detail << "L=" << scale << ", ratio " << (ratio ? ratio->ToString() : "none")
         << ", suite worst factor " << worst << " (" << Summary(suite) << ")";
  return {verified && ratio_ok && suite.ok(), detail.str()};
}

Outcome CounterexampleSearch() {
  const auto start = Clock::now();
  lab::SearchOptions options;
  options.bounds = lab::RandomBounds{12, 10, 8};
  options.seed = 7;
  options.trials = 100'000;
  const lab::SearchResult result = lab::RunSearch(options);
  const double seconds = Seconds(start);
  if (!result.instance) {
    return {false, "none found in " + std::to_string(seconds) + " s"};
  }
  const ElectionInstance& instance = *result.instance;
  const Committee w = PhragmenSequential(instance).committee();
  const auto witness = CheckEjr(instance, w);
  std::ostringstream detail;
  detail << "n=" << instance.num_voters() << " m=" << instance.num_candidates()
         << " k=" << instance.committee_size() << " committee " << w.ToString();
  if (witness) {
    detail << " witness S=" << IndexList(witness->coalition)
           << " T=" << IndexList(witness->alternative);
  }
  detail << ", " << result.phase << " phase, " << seconds << " s";
  return {witness.has_value() && instance.num_voters() <= 12 &&
              instance.num_candidates() <= 10 && seconds < kSearchSeconds,
          detail.str()};
}

int Main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"pav scores and winners", PavScores},
      {"phragmen election times", PhragmenTimes},
      {"rule x q-values and forced branch", RuleXTraces},
      {"intro welfare and core witness", IntroDichotomy},
      {"priceable iff d'hondt on party lists",
       [] { return FromSuite(lab::RunPartyListSuite(kPartyListSeed, kSuiteSize)); }},
      {"laminar proportionality of phragmen and rule x",
       [] { return FromSuite(lab::RunLaminarSuite(kLaminarSeed, kSuiteSize)); }},
      {"pav 2-core, pigou-dalton, pareto (desk-scale evidence)",
       [] { return FromSuite(lab::RunPavSuite(kRandomSeed, kSuiteSize)); }},
      {"rule x ejr and equal-payment core",
       [] { return FromSuite(lab::RunRuleXSuite(kRandomSeed, kSuiteSize)); }},
      {"priceable deviation against rule x", PropB1},
      {"laminar welfare vectors", WelfareVectorPair},
      {"rule x core lower bound and log bound", LowerBound},
      {"ejr counterexample for phragmen", CounterexampleSearch},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    failures += outcome.pass ? 0 : 1;
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " " << (i + 1) << " "
              << criteria[i].first << ": " << outcome.detail << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace abclab

int main() { return abclab::Main(); }
