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

#ifndef ABCLAB_SRC_BIT_PROFILE_H_
#define ABCLAB_SRC_BIT_PROFILE_H_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "abclab/errors.h"
#include "abclab/instance.h"

namespace abclab::internal {

// Ballots as 64-bit masks over the candidates in `columns`.
struct BitProfile {
  std::vector<Candidate> columns;  // bit j stands for columns[j]
  std::vector<std::uint64_t> ballots;

  // Uses the candidates approved by at least one voter in `voters`
  // (all voters when empty). Throws BudgetExceeded past 62 columns.
  static BitProfile Build(const ElectionInstance& instance,
                          const std::vector<Voter>& voters = {}) {
    std::vector<bool> used(instance.num_candidates(), false);
    auto mark = [&](Voter v) {
      for (Candidate c : instance.ballot(v)) used[c] = true;
    };
    if (voters.empty()) {
      for (Voter v = 0; v < instance.num_voters(); ++v) mark(v);
    } else {
      for (Voter v : voters) mark(v);
    }
    BitProfile profile;
    std::vector<int> bit(instance.num_candidates(), -1);
    for (Candidate c = 0; c < instance.num_candidates(); ++c) {
      if (!used[c]) continue;
      bit[c] = static_cast<int>(profile.columns.size());
      profile.columns.push_back(c);
    }
    if (profile.columns.size() > 62) {
      throw BudgetExceeded("enumeration over " +
                           std::to_string(profile.columns.size()) +
                           " approved candidates");
    }
    profile.ballots.assign(instance.num_voters(), 0);
    for (Voter v = 0; v < instance.num_voters(); ++v) {
      for (Candidate c : instance.ballot(v)) {
        if (bit[c] >= 0) profile.ballots[v] |= std::uint64_t{1} << bit[c];
      }
    }
    return profile;
  }

  std::vector<Candidate> Decode(std::uint64_t mask) const {
    std::vector<Candidate> out;
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (mask >> j & 1) out.push_back(columns[j]);
    }
    return out;
  }
};

inline int PopCount(std::uint64_t x) { return std::popcount(x); }

// Calls visit(mask) for every `size`-subset of the bits in `pool`, in
// lexicographic order of the underlying (increasing) bit positions. Stops
// early when visit returns true; returns whether it stopped.
template <typename Visit>
bool ForEachSubsetOfSize(std::uint64_t pool, int size, Visit&& visit) {
  std::vector<int> bits;
  for (int j = 0; j < 64; ++j) {
    if (pool >> j & 1) bits.push_back(j);
  }
  const int total = static_cast<int>(bits.size());
  if (size > total || size < 0) return false;
  std::vector<int> index(size);
  for (int j = 0; j < size; ++j) index[j] = j;
  while (true) {
    std::uint64_t mask = 0;
    for (int j : index) mask |= std::uint64_t{1} << bits[j];
    if (visit(mask)) return true;
    int j = size - 1;
    while (j >= 0 && index[j] == total - size + j) --j;
    if (j < 0) return false;
    ++index[j];
    for (int t = j + 1; t < size; ++t) index[t] = index[t - 1] + 1;
  }
}

// C(n, r), saturating at UINT64_MAX.
inline std::uint64_t Binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 value = 1;
  for (int j = 1; j <= r; ++j) {
    value = value * (n - r + j) / j;
    if (value > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(value);
}

}  // namespace abclab::internal

#endif  // ABCLAB_SRC_BIT_PROFILE_H_
