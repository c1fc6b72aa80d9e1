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

#include "abclab/generators.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace abclab {
namespace {

// Uniform in [0, bound) by rejection, so the mapping does not depend on the
// standard library's distributions.
std::uint64_t Below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  while (true) {
    const std::uint64_t draw = rng();
    if (draw < limit) return draw % bound;
  }
}

int Between(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(Below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

class LaminarBuilder {
 public:
  explicit LaminarBuilder(std::uint64_t seed) : rng_(seed) {}

  // Appends `voters` ballots holding `seats` seats.
  void Node(int depth, int voters, int seats, bool force_split = false) {
    enum Option { kUnanimous, kSplit, kCommon };
    std::vector<Option> options;
    const int g = std::gcd(voters, seats);
    const bool can_split = depth > 1 && voters >= 2 && g >= 2;
    if (force_split) {
      Split(depth, voters, seats);
      return;
    }
    options.push_back(kUnanimous);
    if (can_split) options.push_back(kSplit);
    if (depth > 2 && seats >= 1 && voters >= 2 &&
        std::gcd(voters, seats - 1) >= 2) {
      options.push_back(kCommon);
    }
    switch (options[Below(rng_, options.size())]) {
      case kUnanimous: {
        const int count = std::max(1, seats + Between(rng_, 0, 1));
        std::vector<Candidate> shared;
        for (int j = 0; j < count; ++j) shared.push_back(next_candidate_++);
        for (int v = 0; v < voters; ++v) ballots_.push_back(shared);
        return;
      }
      case kSplit:
        Split(depth, voters, seats);
        return;
      case kCommon: {
        const Candidate common = next_candidate_++;
        const std::size_t first = ballots_.size();
        Node(depth - 1, voters, seats - 1, /*force_split=*/true);
        for (std::size_t v = first; v < ballots_.size(); ++v) {
          ballots_[v].insert(ballots_[v].begin(), common);
        }
        return;
      }
    }
  }

  std::vector<Ballot> TakeBallots() { return std::move(ballots_); }
  int num_candidates() const { return next_candidate_; }

 private:
  void Split(int depth, int voters, int seats) {
    const int g = std::gcd(voters, seats);
    const int part = Between(rng_, 1, g - 1);
    Node(depth - 1, voters / g * part, seats / g * part);
    Node(depth - 1, voters / g * (g - part), seats / g * (g - part));
  }

  std::mt19937_64 rng_;
  std::vector<Ballot> ballots_;
  Candidate next_candidate_ = 0;
};

long Power(long base, int exponent) {
  long out = 1;
  for (int j = 0; j < exponent; ++j) out *= base;
  return out;
}

}  // namespace

PartyListInstance GeneratePartyList(std::span<const int> voter_counts,
                                    std::span<const int> candidates_per_party,
                                    int k) {
  if (voter_counts.size() != candidates_per_party.size()) {
    throw std::invalid_argument("party vectors differ in length");
  }
  if (voter_counts.empty()) throw std::invalid_argument("no parties");
  std::vector<Ballot> ballots;
  Candidate next = 0;
  long n = 0;
  for (std::size_t z = 0; z < voter_counts.size(); ++z) {
    if (voter_counts[z] < 1 || candidates_per_party[z] < 1) {
      throw std::invalid_argument("party sizes must be positive");
    }
    Ballot party(candidates_per_party[z]);
    std::iota(party.begin(), party.end(), next);
    next += candidates_per_party[z];
    for (int v = 0; v < voter_counts[z]; ++v) ballots.push_back(party);
    n += voter_counts[z];
  }
  bool integral = true;
  for (int count : voter_counts) {
    if (static_cast<long>(k) * count % n != 0) integral = false;
  }
  return PartyListInstance{ElectionInstance(next, k, std::move(ballots)),
                           std::vector<int>(voter_counts.begin(),
                                            voter_counts.end()),
                           integral};
}

ElectionInstance GenerateLaminar(std::uint64_t seed, int max_depth,
                                 int max_voters, int k) {
  if (k < 1 || max_depth < 1 || max_voters < 1) {
    throw std::invalid_argument("laminar generator needs k, depth, voters >= 1");
  }
  std::mt19937_64 sizes(seed ^ 0x9e3779b97f4a7c15ULL);
  const int voters = Between(sizes, 1, max_voters);
  LaminarBuilder builder(seed);
  builder.Node(max_depth, voters, k);
  const int m = builder.num_candidates();
  return ElectionInstance(m, k, builder.TakeBallots());
}

ElectionInstance GeneratePigouDaltonCoreFamily(int x, int y) {
  if (y < 2 || x < y * y) {
    throw std::invalid_argument("need y >= 2 and x >= y^2");
  }
  std::vector<Ballot> ballots;
  Candidate next = y;  // 0..y-1 are the common candidates
  for (int v = 0; v < x; ++v) {
    Ballot b(y);
    std::iota(b.begin(), b.end(), 0);
    for (int j = 0; j < y; ++j) b.push_back(next++);
    ballots.push_back(std::move(b));
  }
  for (int v = 0; v < y * x; ++v) {
    Ballot b(y);
    std::iota(b.begin(), b.end(), next);
    next += y;
    ballots.push_back(std::move(b));
  }
  return ElectionInstance(next, y * y * x + y, std::move(ballots));
}

int MinimalLowerBoundScale(int x) {
  if (x < 2) throw std::invalid_argument("x must be at least 2");
  // Every divisibility requirement (L·x^(i-1) approvals per candidate from S_i
  // and s_l/L = (x^l - 1)/(x - 1) whole) already holds at L = 1.
  return 1;
}

RuleXLowerBound GenerateRuleXCoreLowerBound(int x, int scale) {
  if (x < 2) throw std::invalid_argument("x must be at least 2");
  if (scale < MinimalLowerBoundScale(x)) {
    throw std::invalid_argument("L below the minimal feasible scale");
  }
  if (x > 5) throw std::invalid_argument("x^x candidates too many for x > 5");
  const long r_size = Power(x, x);
  const long group_size = scale * Power(x, x - 1);
  auto s = [&](int level) {
    return scale * (Power(x, level) - 1) / (x - 1);
  };

  std::vector<Ballot> ballots(x * group_size);
  std::vector<std::vector<Voter>> groups(x);
  for (int i = 0; i < x; ++i) {
    for (long j = 0; j < group_size; ++j) {
      groups[i].push_back(static_cast<Voter>(i * group_size + j));
    }
  }
  Candidate next = 0;
  auto add_block = [&](const std::vector<Voter>& voters, long count) {
    for (long c = 0; c < count; ++c) {
      for (Voter v : voters) ballots[v].push_back(next);
      ++next;
    }
  };
  auto new_voters = [&](long count) {
    std::vector<Voter> out;
    for (long j = 0; j < count; ++j) {
      out.push_back(static_cast<Voter>(ballots.size()));
      ballots.emplace_back();
    }
    return out;
  };

  // R_1: S_x plus fresh voters, s_x approvers per candidate.
  {
    std::vector<Voter> voters = groups[x - 1];
    for (Voter v : new_voters(s(x) - group_size)) voters.push_back(v);
    add_block(voters, s(x) / scale);
  }
  for (int level = x - 1; level >= 1; --level) {
    const std::vector<Voter>& group = groups[level - 1];
    const long block = s(level);
    std::size_t used = 0;
    while (group.size() - used >= static_cast<std::size_t>(block)) {
      add_block({group.begin() + used, group.begin() + used + block},
                block / scale);
      used += block;
    }
    const long rest = static_cast<long>(group.size() - used);
    if (rest > 0) {
      std::vector<Voter> voters(group.begin() + used, group.end());
      for (Voter v : new_voters(block - rest)) voters.push_back(v);
      add_block(voters, block / scale);
    }
  }

  const Candidate r_first = next;
  for (int i = 0; i < x; ++i) {
    const long width = Power(x, i + 1);
    for (long j = 0; j < group_size; ++j) {
      const long start = j * width % r_size;
      for (long t = 0; t < width; ++t) {
        ballots[groups[i][j]].push_back(
            r_first + static_cast<Candidate>((start + t) % r_size));
      }
    }
  }
  next += static_cast<Candidate>(r_size);

  const long n = static_cast<long>(ballots.size());
  if (n % scale != 0) throw std::logic_error("n is not a multiple of L");
  RuleXLowerBound out{
      ElectionInstance(next, static_cast<int>(n / scale), std::move(ballots)),
      scale, groups, {}, {}};
  for (const auto& group : groups) {
    out.coalition.insert(out.coalition.end(), group.begin(), group.end());
  }
  for (long c = 0; c < r_size; ++c) {
    out.alternative.push_back(r_first + static_cast<Candidate>(c));
  }
  return out;
}

ElectionInstance GenerateRandom(std::uint64_t seed, int n, int m, int k,
                                const Rational& density) {
  if (n < 1 || m < 1 || k < 1 || k > m) {
    throw std::invalid_argument("random instance needs n >= 1, 1 <= k <= m");
  }
  if (density.sign() < 0 || density > Rational(1)) {
    throw std::invalid_argument("density must lie in [0, 1]");
  }
  // threshold = floor(density · 2^64), which is 2^64 itself at density 1.
  mpz_class scaled = density.value().get_num();
  scaled <<= 64;
  scaled /= density.value().get_den();
  unsigned __int128 threshold = 0;
  {
    mpz_class high = scaled >> 64;
    mpz_class low = scaled - (high << 64);
    threshold = static_cast<unsigned __int128>(high.get_ui()) << 64;
    std::uint64_t low_bits = 0;
    mpz_export(&low_bits, nullptr, -1, sizeof(low_bits), 0, 0,
               low.get_mpz_t());
    threshold |= low_bits;
  }
  std::mt19937_64 rng(seed);
  std::vector<Ballot> ballots(n);
  for (int v = 0; v < n; ++v) {
    for (int c = 0; c < m; ++c) {
      if (static_cast<unsigned __int128>(rng()) < threshold) {
        ballots[v].push_back(c);
      }
    }
  }
  return ElectionInstance(m, k, std::move(ballots));
}

}  // namespace abclab
