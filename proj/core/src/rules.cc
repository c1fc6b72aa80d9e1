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

#include "abclab/rules.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace abclab {

Rational PavScore(const ElectionInstance& instance,
                  const Committee& committee) {
  const WelfareVector welfare = ComputeWelfare(instance, committee);
  const int top = welfare.empty()
                      ? 0
                      : *std::max_element(welfare.begin(), welfare.end());
  std::vector<long> count(top + 1, 0);
  for (int u : welfare) ++count[u];
  Rational score;
  Rational harmonic;
  for (int u = 1; u <= top; ++u) {
    harmonic += Rational(1, u);
    if (count[u] > 0) score += harmonic * Rational(count[u]);
  }
  return score;
}

Committee SequentialPav(const ElectionInstance& instance) {
  const int m = instance.num_candidates();
  std::vector<int> utility(instance.num_voters(), 0);
  std::vector<bool> chosen(m, false);
  std::vector<Candidate> members;
  for (int step = 0; step < instance.committee_size(); ++step) {
    Candidate best = -1;
    Rational best_gain;
    for (Candidate c = 0; c < m; ++c) {
      if (chosen[c]) continue;
      Rational gain;
      for (Voter v : instance.approvers(c)) gain += Rational(1, utility[v] + 1);
      if (best < 0 || gain > best_gain) {
        best = c;
        best_gain = std::move(gain);
      }
    }
    chosen[best] = true;
    members.push_back(best);
    for (Voter v : instance.approvers(best)) ++utility[v];
  }
  return Committee(std::move(members));
}

PhragmenTrace PhragmenFrom(const ElectionInstance& instance,
                           std::vector<Rational> balances,
                           const std::vector<Candidate>& elected,
                           const Rational& start) {
  if (static_cast<int>(balances.size()) != instance.num_voters()) {
    throw std::invalid_argument("one balance per voter required");
  }
  const int m = instance.num_candidates();
  const Rational price = instance.SeatPrice();
  std::vector<bool> taken(m, false);
  for (Candidate c : elected) taken.at(c) = true;
  int seats_left = instance.committee_size() - static_cast<int>(elected.size());

  PhragmenTrace trace;
  Rational now = start;
  Rational delta;
  Rational best_delta;
  while (seats_left-- > 0) {
    Candidate best = -1;
    for (Candidate c = 0; c < m; ++c) {
      const auto& supporters = instance.approvers(c);
      if (taken[c] || supporters.empty()) continue;
      Rational held;
      for (Voter v : supporters) held += balances[v];
      delta = price - held;
      if (delta.sign() < 0) {
        delta = Rational(0);
      } else {
        delta /= Rational(static_cast<long>(supporters.size()));
      }
      if (best < 0 || delta < best_delta) {
        best = c;
        best_delta = delta;
      }
    }
    if (best < 0) break;
    now += best_delta;
    if (!best_delta.is_zero()) {
      for (auto& b : balances) b += best_delta;
    }
    std::map<Voter, Rational> paid;
    for (Voter v : instance.approvers(best)) {
      if (!balances[v].is_zero()) paid.emplace(v, balances[v]);
      balances[v] = Rational(0);
    }
    taken[best] = true;
    trace.elected.push_back(best);
    trace.election_times.push_back(now);
    trace.payments.push_back(std::move(paid));
  }
  return trace;
}

PhragmenTrace PhragmenSequential(const ElectionInstance& instance) {
  return PhragmenFrom(instance,
                      std::vector<Rational>(instance.num_voters(), Rational(0)),
                      {}, Rational(0));
}

std::optional<Rational> MinimalShare(std::span<const Rational> budgets,
                                     const Rational& price) {
  std::vector<Rational> sorted(budgets.begin(), budgets.end());
  std::sort(sorted.begin(), sorted.end());
  Rational total;
  for (const auto& b : sorted) total += b;
  if (total < price || sorted.empty()) return std::nullopt;
  // The poorest j approvers pay everything they have; the rest split the
  // residue equally.
  Rational paid_in_full;
  const long count = static_cast<long>(sorted.size());
  for (long j = 0; j < count; ++j) {
    Rational q = (price - paid_in_full) / Rational(count - j);
    if (q <= sorted[j]) return q;
    paid_in_full += sorted[j];
  }
  return std::nullopt;  // unreachable: total >= price
}

RuleXTrace RuleX(const ElectionInstance& instance, const RuleXOptions& options) {
  const int m = instance.num_candidates();
  const Rational price = instance.SeatPrice();
  std::vector<Rational> budget(instance.num_voters(), Rational(1));
  std::vector<bool> taken(m, false);
  RuleXTrace trace;

  for (int step = 0;; ++step) {
    std::vector<std::optional<Rational>> share(m);
    Candidate best = -1;
    std::vector<Rational> supporter_budgets;
    for (Candidate c = 0; c < m; ++c) {
      const auto& supporters = instance.approvers(c);
      if (taken[c] || supporters.empty()) continue;
      supporter_budgets.clear();
      for (Voter v : supporters) supporter_budgets.push_back(budget[v]);
      share[c] = MinimalShare(supporter_budgets, price);
      if (share[c] && (best < 0 || *share[c] < *share[best])) best = c;
    }
    if (best < 0) break;
    if (const auto forced = options.forced_picks.find(step);
        forced != options.forced_picks.end()) {
      const Candidate c = forced->second;
      if (c < 0 || c >= m || !share[c] || *share[c] != *share[best]) {
        throw std::invalid_argument(
            "forced pick " + std::to_string(c + 1) + " at step " +
            std::to_string(step + 1) + " is not among the cheapest candidates");
      }
      best = c;
    }
    const Rational q = *share[best];
    for (Voter v : instance.approvers(best)) budget[v] -= Min(q, budget[v]);
    taken[best] = true;
    trace.elected.push_back(best);
    trace.q_values.push_back(q);
    trace.budgets.push_back(budget);
  }

  if (options.completion == Completion::kPhragmenContinuation &&
      static_cast<int>(trace.elected.size()) < instance.committee_size()) {
    PhragmenTrace rest =
        PhragmenFrom(instance, budget, trace.elected, Rational(0));
    trace.completed = !rest.elected.empty();
    for (std::size_t j = 0; j < rest.elected.size(); ++j) {
      trace.elected.push_back(rest.elected[j]);
      trace.continuation_times.push_back(rest.election_times[j]);
    }
  }
  return trace;
}

RuleXTrace RuleXComplete(const ElectionInstance& instance,
                         Completion completion) {
  RuleXOptions options;
  options.completion = completion;
  return RuleX(instance, options);
}

std::vector<int> DHondt(std::span<const int> party_sizes, int seats) {
  if (party_sizes.empty()) throw std::invalid_argument("no parties");
  if (seats < 0) throw std::invalid_argument("negative seat count");
  for (int size : party_sizes) {
    if (size < 0) throw std::invalid_argument("negative party size");
  }
  std::vector<int> allocation(party_sizes.size(), 0);
  for (int s = 0; s < seats; ++s) {
    std::size_t best = 0;
    for (std::size_t z = 1; z < party_sizes.size(); ++z) {
      // size_z / (seats_z + 1) > size_best / (seats_best + 1)
      const long long lhs =
          static_cast<long long>(party_sizes[z]) * (allocation[best] + 1);
      const long long rhs =
          static_cast<long long>(party_sizes[best]) * (allocation[z] + 1);
      if (lhs > rhs) best = z;
    }
    ++allocation[best];
  }
  return allocation;
}

}  // namespace abclab
