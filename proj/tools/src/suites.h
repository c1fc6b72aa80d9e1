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

#ifndef ABCLAB_TOOLS_SUITES_H_
#define ABCLAB_TOOLS_SUITES_H_

#include <cstdint>
#include <string>
#include <vector>

#include "abclab/generators.h"
#include "abclab/instance.h"

namespace abclab::lab {

struct RandomBounds {
  int max_n = 8;
  int max_m = 8;
  int max_k = 4;
};

// Instance `index` of a seeded family: sizes uniform in [1, max], density
// drawn from {1/4, 1/3, 1/2, 2/3, 3/4}.
ElectionInstance RandomSuiteInstance(std::uint64_t seed, int index,
                                     const RandomBounds& bounds);

// Like RandomSuiteInstance, but every other index uses a voter-type model:
// a few voter types, each candidate approved by a random set of types.
ElectionInstance SearchInstance(std::uint64_t seed, std::uint64_t trial,
                                const RandomBounds& bounds);

// Integral party-list instance with n <= max_n and k <= max_k; each party
// holds between its seat share and share + 1 candidates.
PartyListInstance PartyListSuiteInstance(std::uint64_t seed, int index,
                                         int max_n, int max_k);

// gen_laminar with depth <= 4, at most 12 voters and k <= 6.
ElectionInstance LaminarSuiteInstance(std::uint64_t seed, int index);

// Seats per party, parties ordered by their lowest candidate.
std::vector<int> SeatsPerParty(const PartyListInstance& parties,
                               const Committee& committee);

// Outcome of one property sweep.
struct SuiteResult {
  std::string name;
  int instances = 0;
  long checks = 0;
  long failures = 0;
  std::string first_failure;  // empty when failures == 0

  bool ok() const { return failures == 0; }
};

// Priceable committees coincide with D'Hondt seat vectors on integral
// party-list instances.
SuiteResult RunPartyListSuite(std::uint64_t seed, int count);

// Phragmén and Rule X are laminar proportional; Phragmén ends at time k/n.
SuiteResult RunLaminarSuite(std::uint64_t seed, int count);

// Every PAV winner: no deviation at lambda = 2, no Pigou–Dalton transfer,
// Pareto optimal.
SuiteResult RunPavSuite(std::uint64_t seed, int count);

// Rule X: EJR and the core subject to equal-payment priceability.
SuiteResult RunRuleXSuite(std::uint64_t seed, int count);

// Rule X's minimal core-approximation factor stays below 2·log2(2k) + 1.
// `worst` receives the largest factor seen, rendered exactly.
SuiteResult RunRuleXCoreBoundSuite(std::uint64_t seed, int count,
                                   std::string* worst = nullptr);

}  // namespace abclab::lab

#endif  // ABCLAB_TOOLS_SUITES_H_
