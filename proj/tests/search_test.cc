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

#include "abclab/axioms.h"
#include "abclab/rules.h"
#include "search.h"

namespace abclab::lab {
namespace {

TEST(SearchTest, ParseViolation) {
  const Violation ejr = ParseViolation("ejr-phragmen");
  EXPECT_EQ(ejr.axiom, SearchAxiom::kEjr);
  EXPECT_EQ(ejr.rule, SearchRule::kPhragmen);
  const Violation core2 = ParseViolation("core2+pav");
  EXPECT_EQ(core2.axiom, SearchAxiom::kCore2);
  EXPECT_EQ(core2.rule, SearchRule::kPav);
  EXPECT_EQ(ToString(core2), "core2+pav");
  EXPECT_EQ(ToString(ParseViolation("pigou-dalton+rulex")), "pigou-dalton+rulex");
  EXPECT_THROW(ParseViolation("ejr"), std::invalid_argument);
  EXPECT_THROW(ParseViolation("ejr+borda"), std::invalid_argument);
  EXPECT_THROW(ParseViolation("fairness+pav"), std::invalid_argument);
}

// Reported hits are genuine: rerunning the rule on the instance reproduces
// a committee that fails the axiom.
TEST(SearchTest, HitsAreGenuine) {
  SearchOptions options;
  options.violation = ParseViolation("pigou-dalton+phragmen");
  options.bounds = {5, 5, 3};
  options.trials = 200;
  const SearchResult result = RunSearch(options);
  ASSERT_TRUE(result.instance.has_value());
  const ElectionInstance& e = *result.instance;
  const Committee w = PhragmenSequential(e).committee();
  EXPECT_EQ(w, result.counterexample->committee);
  EXPECT_TRUE(CheckPigouDalton(e, w).has_value());
  EXPECT_EQ(result.phase, "exhaustive");
  EXPECT_TRUE(CheckViolation(e, options.violation, kDefaultSearchBudget));
}

// Properties the rules are known to have are never reported as violated.
TEST(SearchTest, NoFalsePositives) {
  for (const char* text : {"pigou-dalton+pav", "core2+pav", "ejr+pav",
                           "pjr+phragmen", "ejr+rulex", "priceable+phragmen"}) {
    SearchOptions options;
    options.violation = ParseViolation(text);
    options.bounds = {5, 5, 3};
    options.trials = 300;
    const SearchResult result = RunSearch(options);
    EXPECT_FALSE(result.instance.has_value())
        << text << "\n"
        << SerializeInstance(*result.instance);
    EXPECT_EQ(result.random_trials, 300u);
    EXPECT_GT(result.exhaustive_instances, 0u);
  }
}

TEST(SearchTest, DeterministicPerSeed) {
  SearchOptions options;
  options.violation = ParseViolation("pigou-dalton+phragmen");
  options.bounds = {5, 5, 3};
  options.trials = 500;
  options.seed = 99;
  const SearchResult a = RunSearch(options), b = RunSearch(options);
  ASSERT_EQ(a.instance.has_value(), b.instance.has_value());
  ASSERT_TRUE(a.instance.has_value());
  EXPECT_EQ(*a.instance, *b.instance);
  EXPECT_EQ(a.phase, b.phase);
}

}  // namespace
}  // namespace abclab::lab
