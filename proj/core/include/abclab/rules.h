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

#ifndef ABCLAB_RULES_H_
#define ABCLAB_RULES_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "abclab/errors.h"
#include "abclab/instance.h"
#include "abclab/rational.h"

namespace abclab {

// Σ_i H(|A_i ∩ W|).
Rational PavScore(const ElectionInstance& instance, const Committee& committee);

// Every size-k committee with maximum PAV score, in increasing order.
// Branch and bound; throws BudgetExceeded after `node_budget` nodes.
std::vector<Committee> PavWinners(const ElectionInstance& instance,
                                  std::uint64_t node_budget = 50'000'000);

// Greedy PAV: k rounds of the largest marginal gain, lowest index on ties.
Committee SequentialPav(const ElectionInstance& instance);

struct PhragmenTrace {
  std::vector<Candidate> elected;
  std::vector<Rational> election_times;
  // Step j: what each approver of elected[j] paid (positive amounts only).
  std::vector<std::map<Voter, Rational>> payments;

  Committee committee() const { return Committee(elected); }
};

// Event-driven Phragmén: voters earn money at unit rate and a candidate is
// bought once its approvers hold n/k together. Stops after k purchases or
// when no remaining candidate has an approver.
PhragmenTrace PhragmenSequential(const ElectionInstance& instance);

// Continues Phragmén from the given balances at time `start`, skipping the
// candidates in `elected`, until `elected.size() + result.size() == k`.
PhragmenTrace PhragmenFrom(const ElectionInstance& instance,
                           std::vector<Rational> balances,
                           const std::vector<Candidate>& elected,
                           const Rational& start);

enum class Completion { kNone, kPhragmenContinuation };

struct RuleXOptions {
  Completion completion = Completion::kNone;
  // Step index (0-based) -> candidate to pick at that step. The candidate must
  // be among the cheapest at that step, i.e. a legal tie-break.
  std::map<int, Candidate> forced_picks;
};

struct RuleXTrace {
  std::vector<Candidate> elected;
  // One entry per Rule X step; continuation steps are not included.
  std::vector<Rational> q_values;
  // Budgets after each Rule X step.
  std::vector<std::vector<Rational>> budgets;
  // Election times of members appended by Phragmén continuation.
  std::vector<Rational> continuation_times;
  bool completed = false;

  Committee committee() const { return Committee(elected); }
};

// Smallest q with Σ_{i ∈ N(c)} min(q, b_i) ≥ price, or nullopt if the
// approvers cannot afford the price at all.
std::optional<Rational> MinimalShare(std::span<const Rational> budgets,
                                     const Rational& price);

// Rule X with unit budgets and seat price n/k. May return fewer than k.
RuleXTrace RuleX(const ElectionInstance& instance,
                 const RuleXOptions& options = {});

RuleXTrace RuleXComplete(const ElectionInstance& instance,
                         Completion completion);

// Highest averages with divisors 1, 2, 3, ...; lowest party index on ties.
std::vector<int> DHondt(std::span<const int> party_sizes, int seats);

}  // namespace abclab

#endif  // ABCLAB_RULES_H_
