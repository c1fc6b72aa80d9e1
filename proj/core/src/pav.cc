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
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "abclab/errors.h"
#include "abclab/rules.h"

namespace abclab {
namespace {

using Score = __int128;

// PAV scores scaled by lcm(1..k) are integers; the scale is checked against
// overflow for n voters.
Score ScaledHarmonicBase(int k, int n) {
  Score lcm = 1;
  const Score limit = (static_cast<Score>(1) << 120) / (Score(n) * (k + 1) + 1);
  for (int j = 2; j <= k; ++j) {
    lcm = lcm / std::gcd(static_cast<long long>(lcm % j), static_cast<long long>(j)) * j;
    if (lcm > limit) {
      throw BudgetExceeded("PAV score scale for k = " + std::to_string(k) +
                           " is too large");
    }
  }
  return lcm;
}

class PavSearch {
 public:
  PavSearch(const ElectionInstance& instance, std::uint64_t node_budget)
      : instance_(instance),
        budget_(node_budget, "PAV branch and bound"),
        k_(instance.committee_size()),
        m_(instance.num_candidates()),
        utility_(instance.num_voters(), 0) {
    const Score scale = ScaledHarmonicBase(k_, instance.num_voters());
    increment_.resize(k_ + 1);
    for (int j = 0; j <= k_; ++j) increment_[j] = scale / (j + 1);
  }

  std::vector<Committee> Run() {
    // Greedy committee as the initial incumbent.
    const Committee greedy = SequentialPav(instance_);
    best_ = 0;
    for (int u : ComputeWelfare(instance_, greedy)) {
      for (int t = 0; t < u; ++t) best_ += increment_[t];
    }
    Descend(0, 0);
    std::sort(winners_.begin(), winners_.end());
    return winners_;
  }

 private:
  Score Gain(Candidate c) const {
    Score gain = 0;
    for (Voter v : instance_.approvers(c)) gain += increment_[utility_[v]];
    return gain;
  }

  void Descend(Candidate next, Score score) {
    budget_.Charge();
    const int slots = k_ - static_cast<int>(chosen_.size());
    if (slots == 0) {
      if (score > best_) {
        best_ = score;
        winners_.clear();
      }
      if (score == best_) winners_.emplace_back(chosen_);
      return;
    }
    if (m_ - next < slots) return;

    // Marginal gains only shrink as members are added, so the best `slots`
    // current gains bound any completion.
    gains_scratch_.clear();
    for (Candidate c = next; c < m_; ++c) gains_scratch_.push_back(Gain(c));
    std::partial_sort(gains_scratch_.begin(), gains_scratch_.begin() + slots,
                      gains_scratch_.end(), std::greater<>());
    Score bound = score;
    for (int j = 0; j < slots; ++j) bound += gains_scratch_[j];
    if (bound < best_) return;

    const Score gain = Gain(next);
    chosen_.push_back(next);
    for (Voter v : instance_.approvers(next)) ++utility_[v];
    Descend(next + 1, score + gain);
    for (Voter v : instance_.approvers(next)) --utility_[v];
    chosen_.pop_back();

    Descend(next + 1, score);
  }

  const ElectionInstance& instance_;
  SearchBudget budget_;
  int k_;
  int m_;
  std::vector<int> utility_;
  std::vector<Score> increment_;
  std::vector<Candidate> chosen_;
  std::vector<Score> gains_scratch_;
  Score best_ = 0;
  std::vector<Committee> winners_;
};

}  // namespace

std::vector<Committee> PavWinners(const ElectionInstance& instance,
                                  std::uint64_t node_budget) {
  return PavSearch(instance, node_budget).Run();
}

}  // namespace abclab
