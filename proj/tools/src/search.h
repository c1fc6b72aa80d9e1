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

#ifndef ABCLAB_TOOLS_SEARCH_H_
#define ABCLAB_TOOLS_SEARCH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "abclab/errors.h"
#include "abclab/instance.h"
#include "suites.h"

namespace abclab::lab {

enum class SearchRule { kPav, kSeqPav, kPhragmen, kRuleX, kRuleXComplete };
enum class SearchAxiom {
  kEjr,
  kPjr,
  kCore,
  kCore2,
  kPigouDalton,
  kPareto,
  kPriceable,
  kPriceEq,
};

struct Violation {
  SearchAxiom axiom;
  SearchRule rule;
};

// "ejr-phragmen" or "<axiom>+<rule>", e.g. "core2+pav". Throws
// std::invalid_argument on anything else.
Violation ParseViolation(std::string_view text);
std::string ToString(const Violation& violation);

// A committee chosen by the rule that fails the axiom, with the witness
// rendered for reports.
struct Counterexample {
  Committee committee;
  std::string witness;
};

// Runs the rule and checks the axiom. For PAV every optimal committee is
// checked and the first failing one is reported.
std::optional<Counterexample> CheckViolation(const ElectionInstance& instance,
                                             const Violation& violation,
                                             std::uint64_t budget);

struct SearchOptions {
  Violation violation{SearchAxiom::kEjr, SearchRule::kPhragmen};
  RandomBounds bounds{12, 10, 8};
  std::uint64_t seed = 1;
  std::uint64_t trials = 100'000;
  std::uint64_t budget = kDefaultSearchBudget;
};

struct SearchResult {
  std::optional<ElectionInstance> instance;
  std::optional<Counterexample> counterexample;
  std::string phase;  // which phase produced the reported instance
  std::uint64_t exhaustive_instances = 0;
  std::uint64_t random_trials = 0;
  std::uint64_t guided_restarts = 0;
};

// Three phases, each deterministic per seed:
//   1. every profile with n·m <= 12 inside the bounds;
//   2. `trials` seeded random instances (SearchInstance);
//   3. for EJR under Phragmén only, and only when 1-2 found nothing, a local
//      search over profiles with a planted cohesive group, guided by how
//      close the group comes to affording one of its shared candidates.
//      Sizes are tried smallest first and the first hit ends the phase.
// Hits are shrunk greedily and the smallest by (n + m, n, m, k, text) wins.
SearchResult RunSearch(const SearchOptions& options);

}  // namespace abclab::lab

#endif  // ABCLAB_TOOLS_SEARCH_H_
