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

#ifndef ABCLAB_LAMINAR_H_
#define ABCLAB_LAMINAR_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "abclab/errors.h"
#include "abclab/instance.h"

namespace abclab {

// One node of a laminar derivation.
//   kUnanimous:       every voter approves exactly `candidates`, which holds
//                     at least `seats` candidates.
//   kCommonCandidate: `candidates` = {c}, approved by every voter; one child
//                     with seats - 1 seats.
//   kSplit:           children with disjoint candidates and voters, each
//                     holding seats * |voters_j| / |voters| seats.
struct LaminarNode {
  enum class Kind { kUnanimous, kCommonCandidate, kSplit };

  Kind kind = Kind::kUnanimous;
  std::vector<Voter> voters;
  int seats = 0;
  std::vector<Candidate> candidates;
  std::vector<LaminarNode> children;
};

struct LaminarDecomposition {
  LaminarNode root;
};

// Recognizes laminar instances. Stripping common candidates and splitting
// into connected components of the shared-candidate voter graph are both
// forced moves, so the derivation found here is canonical.
std::optional<LaminarDecomposition> CheckLaminar(const ElectionInstance& instance);

// Throws std::invalid_argument when `instance` is not laminar.
bool CheckLaminarProportional(const ElectionInstance& instance,
                              const Committee& committee);
bool IsLaminarProportional(const LaminarDecomposition& decomposition,
                           const Committee& committee);

// Every laminar-proportional committee, in increasing order.
std::vector<Committee> LaminarProportionalCommittees(
    const LaminarDecomposition& decomposition,
    std::uint64_t budget = kDefaultSearchBudget);

// True when any two approver sets N(c), N(c') are disjoint or nested.
bool ApproverSetsLaminar(const ElectionInstance& instance);

}  // namespace abclab

#endif  // ABCLAB_LAMINAR_H_
