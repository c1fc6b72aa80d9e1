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

#ifndef ABCLAB_TESTS_TEST_UTIL_H_
#define ABCLAB_TESTS_TEST_UTIL_H_

// Seeded instance generators and brute-force oracles for the tests. The
// oracles follow the raw definitions and share no code with the library
// beyond the instance type and Rational.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "abclab/instance.h"
#include "abclab/rational.h"

namespace abclab::testing {

// Small hand-rolled generator: sizes uniform in [1, max], each approval an
// independent coin with probability `percent`/100.
class InstanceGen {
 public:
  explicit InstanceGen(std::uint64_t seed) : rng_(seed) {}

  int Uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  ElectionInstance Next(int max_n, int max_m, int max_k) {
    const int n = Uniform(1, max_n);
    const int m = Uniform(1, max_m);
    const int k = Uniform(1, std::min(m, max_k));
    const int percent = Uniform(15, 85);
    std::vector<Ballot> ballots(n);
    for (auto& ballot : ballots) {
      for (Candidate c = 0; c < m; ++c) {
        if (Uniform(0, 99) < percent) ballot.push_back(c);
      }
    }
    return ElectionInstance(m, k, std::move(ballots));
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline std::vector<Candidate> Members(std::uint32_t mask, int m) {
  std::vector<Candidate> out;
  for (int c = 0; c < m; ++c) {
    if (mask >> c & 1) out.push_back(c);
  }
  return out;
}

inline int Popcount(std::uint32_t mask) { return __builtin_popcount(mask); }

inline std::uint32_t BallotMask(const Ballot& ballot) {
  std::uint32_t mask = 0;
  for (Candidate c : ballot) mask |= 1u << c;
  return mask;
}

// Calls f(mask) for every subset of {0..m-1} of size k.
inline void ForEachSubset(int m, int k,
                          const std::function<void(std::uint32_t)>& f) {
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (Popcount(mask) == k) f(mask);
  }
}

inline Rational OraclePavScore(const ElectionInstance& instance,
                               std::uint32_t committee) {
  Rational score;
  for (const Ballot& ballot : instance.ballots()) {
    const int hits = Popcount(BallotMask(ballot) & committee);
    for (int j = 1; j <= hits; ++j) score += Rational(1, j);
  }
  return score;
}

inline std::vector<std::uint32_t> OraclePavWinners(
    const ElectionInstance& instance) {
  std::vector<std::uint32_t> best;
  Rational top(-1);
  ForEachSubset(instance.num_candidates(), instance.committee_size(),
                [&](std::uint32_t mask) {
                  const Rational s = OraclePavScore(instance, mask);
                  if (s > top) {
                    top = s;
                    best.clear();
                  }
                  if (s == top) best.push_back(mask);
                });
  return best;
}

// Phragmén via closed-form purchase times: candidate c becomes affordable at
// (n/k + Σ_{i ∈ N(c)} spent_i) / |N(c)|, where spent_i is the time voter i
// last emptied their account. Lowest index on ties.
inline std::pair<std::vector<Candidate>, std::vector<Rational>> OraclePhragmen(
    const ElectionInstance& instance) {
  const int n = instance.num_voters();
  const int m = instance.num_candidates();
  const Rational price(n, instance.committee_size());
  std::vector<Rational> spent(n);
  std::vector<bool> taken(m, false);
  std::vector<Candidate> order;
  std::vector<Rational> times;
  for (int step = 0; step < instance.committee_size(); ++step) {
    std::optional<Rational> best_time;
    Candidate best = -1;
    for (Candidate c = 0; c < m; ++c) {
      int count = 0;
      Rational sum = price;
      for (Voter v = 0; v < n; ++v) {
        if (!instance.Approves(v, c)) continue;
        ++count;
        sum += spent[v];
      }
      if (taken[c] || count == 0) continue;
      const Rational t = sum / Rational(count);
      if (!best_time || t < *best_time) {
        best_time = t;
        best = c;
      }
    }
    if (best < 0) break;
    taken[best] = true;
    order.push_back(best);
    times.push_back(*best_time);
    for (Voter v = 0; v < n; ++v) {
      if (instance.Approves(v, best)) spent[v] = *best_time;
    }
  }
  return {order, times};
}

// Rule X by bisection-free scan: q is the smallest value at which capped
// budgets cover the price, found by trying each budget level in turn.
inline std::pair<std::vector<Candidate>, std::vector<Rational>> OracleRuleX(
    const ElectionInstance& instance) {
  const int n = instance.num_voters();
  const int m = instance.num_candidates();
  const Rational price(n, instance.committee_size());
  std::vector<Rational> budget(n, Rational(1));
  std::vector<bool> taken(m, false);
  std::vector<Candidate> order;
  std::vector<Rational> qs;
  while (true) {
    std::optional<Rational> best_q;
    Candidate best = -1;
    for (Candidate c = 0; c < m; ++c) {
      if (taken[c]) continue;
      std::vector<Rational> b;
      for (Voter v = 0; v < n; ++v) {
        if (instance.Approves(v, c)) b.push_back(budget[v]);
      }
      Rational total;
      for (const Rational& x : b) total += x;
      if (b.empty() || total < price) continue;
      // Candidate q values: price spread over the voters that are not capped.
      std::optional<Rational> q;
      for (std::size_t capped = 0; capped <= b.size(); ++capped) {
        std::vector<Rational> sorted = b;
        std::sort(sorted.begin(), sorted.end());
        Rational low;
        for (std::size_t i = 0; i < capped; ++i) low += sorted[i];
        if (capped == b.size()) break;
        const Rational guess =
            (price - low) / Rational(static_cast<int>(b.size() - capped));
        Rational paid;
        for (const Rational& x : b) paid += Min(x, guess);
        if (paid == price && guess >= Rational(0)) {
          if (!q || guess < *q) q = guess;
        }
      }
      if (q && (!best_q || *q < *best_q)) {
        best_q = q;
        best = c;
      }
    }
    if (best < 0) break;
    taken[best] = true;
    order.push_back(best);
    qs.push_back(*best_q);
    for (Voter v = 0; v < n; ++v) {
      if (instance.Approves(v, best)) budget[v] -= Min(budget[v], *best_q);
    }
  }
  return {order, qs};
}

// EJR / PJR over every voter subset (n <= 14). A group of at least l·n/k
// voters sharing l candidates violates EJR when every member has fewer than l
// representatives, and PJR when the members jointly have fewer than l.
inline bool OracleEjrViolated(const ElectionInstance& instance,
                              std::uint32_t committee, bool pjr = false) {
  const int n = instance.num_voters();
  const int k = instance.committee_size();
  std::vector<std::uint32_t> ballots;
  for (const Ballot& b : instance.ballots()) ballots.push_back(BallotMask(b));
  for (std::uint32_t group = 1; group < (1u << n); ++group) {
    std::uint32_t common = ~0u;
    std::uint32_t joint = 0;
    int most = 0;
    for (Voter v = 0; v < n; ++v) {
      if (!(group >> v & 1)) continue;
      common &= ballots[v];
      joint |= ballots[v] & committee;
      most = std::max(most, Popcount(ballots[v] & committee));
    }
    const int size = Popcount(group);
    for (int l = 1; l <= Popcount(common) && l <= k; ++l) {
      if (size * k < l * n) break;
      if (pjr ? Popcount(joint) < l : most < l) return true;
    }
  }
  return false;
}

// Core (lambda = 1) and lambda-core over every candidate set T.
inline bool OracleCoreBlocked(const ElectionInstance& instance,
                              std::uint32_t committee, const Rational& lambda) {
  const int n = instance.num_voters();
  const int m = instance.num_candidates();
  const int k = instance.committee_size();
  for (std::uint32_t t = 1; t < (1u << m); ++t) {
    int supporters = 0;
    for (const Ballot& b : instance.ballots()) {
      const int gain = Popcount(BallotMask(b) & t);
      const int have = Popcount(BallotMask(b) & committee);
      const bool better = lambda == Rational(1)
                              ? gain > have
                              : Rational(gain) > Max(lambda * Rational(have),
                                                     Rational(1));
      if (better) ++supporters;
    }
    if (supporters * k >= Popcount(t) * n) return true;
  }
  return false;
}

inline std::vector<int> Welfare(const ElectionInstance& instance,
                                std::uint32_t committee) {
  std::vector<int> out;
  for (const Ballot& b : instance.ballots()) {
    out.push_back(Popcount(BallotMask(b) & committee));
  }
  return out;
}

inline bool OracleParetoDominated(const ElectionInstance& instance,
                                  std::uint32_t committee) {
  const std::vector<int> base = Welfare(instance, committee);
  bool dominated = false;
  ForEachSubset(instance.num_candidates(), Popcount(committee),
                [&](std::uint32_t other) {
                  const std::vector<int> w = Welfare(instance, other);
                  bool weak = true, strict = false;
                  for (std::size_t i = 0; i < w.size(); ++i) {
                    weak = weak && w[i] >= base[i];
                    strict = strict || w[i] > base[i];
                  }
                  dominated = dominated || (weak && strict);
                });
  return dominated;
}

// A transfer changes exactly two voters i, j with base[i] > base[j]:
// i loses d, j gains d, and j still has no more than i afterwards.
inline bool OraclePigouDaltonImprovable(const ElectionInstance& instance,
                                        std::uint32_t committee) {
  const std::vector<int> base = Welfare(instance, committee);
  bool found = false;
  ForEachSubset(instance.num_candidates(), Popcount(committee),
                [&](std::uint32_t other) {
                  const std::vector<int> w = Welfare(instance, other);
                  std::vector<int> changed;
                  for (std::size_t i = 0; i < w.size(); ++i) {
                    if (w[i] != base[i]) changed.push_back(static_cast<int>(i));
                  }
                  if (changed.size() != 2) return;
                  int rich = changed[0], poor = changed[1];
                  if (base[rich] < base[poor]) std::swap(rich, poor);
                  const int d = base[rich] - w[rich];
                  if (d > 0 && w[poor] - base[poor] == d &&
                      w[poor] <= w[rich]) {
                    found = true;
                  }
                });
  return found;
}

inline std::uint32_t Mask(const Committee& committee) {
  std::uint32_t mask = 0;
  for (Candidate c : committee) mask |= 1u << c;
  return mask;
}

}  // namespace abclab::testing

#endif  // ABCLAB_TESTS_TEST_UTIL_H_
