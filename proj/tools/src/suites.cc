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

#include "suites.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "abclab/axioms.h"
#include "abclab/laminar.h"
#include "abclab/rules.h"

namespace abclab::lab {
namespace {

std::mt19937_64 Stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq sequence{static_cast<std::uint32_t>(seed),
                         static_cast<std::uint32_t>(seed >> 32),
                         static_cast<std::uint32_t>(index),
                         static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(sequence);
}

int Between(std::mt19937_64& rng, int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return lo + static_cast<int>(draw % span);
}

const Rational& Density(std::mt19937_64& rng) {
  static const Rational kDensities[] = {Rational(1, 4), Rational(1, 3),
                                        Rational(1, 2), Rational(2, 3),
                                        Rational(3, 4)};
  return kDensities[Between(rng, 0, 4)];
}

void Fail(SuiteResult& result, int index, const ElectionInstance& instance,
          const std::string& what) {
  if (result.failures++ == 0) {
    std::ostringstream text;
    text << "instance " << index << ": " << what << "\n"
         << SerializeInstance(instance);
    result.first_failure = text.str();
  }
}

}  // namespace

ElectionInstance RandomSuiteInstance(std::uint64_t seed, int index,
                                     const RandomBounds& bounds) {
  std::mt19937_64 rng = Stream(seed, static_cast<std::uint64_t>(index));
  const int n = Between(rng, 1, bounds.max_n);
  const int m = Between(rng, 1, bounds.max_m);
  const int k = Between(rng, 1, std::min(m, bounds.max_k));
  const Rational& density = Density(rng);
  return GenerateRandom(rng(), n, m, k, density);
}

ElectionInstance SearchInstance(std::uint64_t seed, std::uint64_t trial,
                                const RandomBounds& bounds) {
  if (trial % 2 == 0) {
    return RandomSuiteInstance(seed, static_cast<int>(trial / 2), bounds);
  }
  std::mt19937_64 rng = Stream(~seed, trial);
  const int n = Between(rng, 1, bounds.max_n);
  const int m = Between(rng, 1, bounds.max_m);
  const int k = Between(rng, 1, std::min(m, bounds.max_k));
  const int types = Between(rng, 1, std::min(n, 5));
  std::vector<int> type(n);
  for (int v = 0; v < n; ++v) type[v] = v < types ? v : Between(rng, 0, types - 1);
  std::vector<Ballot> ballots(n);
  for (Candidate c = 0; c < m; ++c) {
    const int mask = Between(rng, 1, (1 << types) - 1);
    for (Voter v = 0; v < n; ++v) {
      if (mask >> type[v] & 1) ballots[v].push_back(c);
    }
  }
  return ElectionInstance(m, k, std::move(ballots));
}

PartyListInstance PartyListSuiteInstance(std::uint64_t seed, int index,
                                         int max_n, int max_k) {
  std::mt19937_64 rng = Stream(seed, static_cast<std::uint64_t>(index));
  while (true) {
    const int k = Between(rng, 1, max_k);
    const int parties = Between(rng, 1, std::min(k, 4));
    // Random composition of k into `parties` positive seat shares.
    std::vector<int> cuts;
    while (static_cast<int>(cuts.size()) < parties - 1) {
      const int cut = Between(rng, 1, k - 1);
      if (std::find(cuts.begin(), cuts.end(), cut) == cuts.end()) {
        cuts.push_back(cut);
      }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(k);
    std::vector<int> shares;
    int previous = 0;
    for (int cut : cuts) {
      shares.push_back(cut - previous);
      previous = cut;
    }
    int divisor = 0;
    for (int share : shares) divisor = std::gcd(divisor, share);
    const int max_scale = max_n * divisor / k;
    if (max_scale < 1) continue;
    const int scale = Between(rng, 1, max_scale);
    std::vector<int> voters;
    std::vector<int> candidates;
    for (int share : shares) {
      voters.push_back(share / divisor * scale);
      candidates.push_back(share + Between(rng, 0, 1));
    }
    return GeneratePartyList(voters, candidates, k);
  }
}

ElectionInstance LaminarSuiteInstance(std::uint64_t seed, int index) {
  std::mt19937_64 rng = Stream(seed, static_cast<std::uint64_t>(index));
  const int k = Between(rng, 1, 6);
  return GenerateLaminar(rng(), 4, 12, k);
}

std::vector<int> SeatsPerParty(const PartyListInstance& parties,
                               const Committee& committee) {
  // Party z's candidates are the ballot of its first voter.
  std::vector<int> seats;
  Voter first = 0;
  for (int size : parties.party_sizes) {
    const Ballot& ballot = parties.instance.ballot(first);
    int count = 0;
    for (Candidate c : ballot) count += committee.Contains(c) ? 1 : 0;
    seats.push_back(count);
    first += size;
  }
  return seats;
}

SuiteResult RunPartyListSuite(std::uint64_t seed, int count) {
  SuiteResult result;
  result.name = "priceable iff D'Hondt on integral party lists";
  for (int index = 0; index < count; ++index) {
    const PartyListInstance parties =
        PartyListSuiteInstance(seed, index, 12, 6);
    const ElectionInstance& instance = parties.instance;
    const std::vector<int> expected =
        DHondt(parties.party_sizes, instance.committee_size());
    ++result.instances;
    // Every size-k committee.
    const int m = instance.num_candidates();
    const int k = instance.committee_size();
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
      std::vector<Candidate> members;
      for (int c = 0; c < m; ++c) {
        if (pick[c]) members.push_back(c);
      }
      const Committee committee(std::move(members));
      const bool priceable = CheckPriceable(instance, committee).has_value();
      const bool dhondt = SeatsPerParty(parties, committee) == expected;
      ++result.checks;
      if (priceable != dhondt) {
        Fail(result, index, instance,
             "committee " + committee.ToString() +
                 (priceable ? " priceable but not D'Hondt"
                            : " D'Hondt but not priceable"));
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return result;
}

SuiteResult RunLaminarSuite(std::uint64_t seed, int count) {
  SuiteResult result;
  result.name = "Phragmén and Rule X laminar proportional";
  for (int index = 0; index < count; ++index) {
    const ElectionInstance instance = LaminarSuiteInstance(seed, index);
    ++result.instances;
    const auto decomposition = CheckLaminar(instance);
    ++result.checks;
    if (!decomposition) {
      Fail(result, index, instance, "generated instance not laminar");
      continue;
    }
    ++result.checks;
    if (!ApproverSetsLaminar(instance)) {
      Fail(result, index, instance, "approver sets not laminar");
    }
    const PhragmenTrace phragmen = PhragmenSequential(instance);
    ++result.checks;
    if (!IsLaminarProportional(*decomposition, phragmen.committee())) {
      Fail(result, index, instance,
           "Phragmén " + phragmen.committee().ToString());
    }
    ++result.checks;
    // Seats cost n/k here, so the whole electorate has paid for k seats
    // exactly at time 1 (k/n when a seat costs one dollar).
    if (phragmen.election_times.empty() ||
        phragmen.election_times.back() != Rational(1)) {
      Fail(result, index, instance, "Phragmén does not end at time 1");
    }
    const RuleXTrace rule_x = RuleX(instance);
    ++result.checks;
    if (!IsLaminarProportional(*decomposition, rule_x.committee())) {
      Fail(result, index, instance, "Rule X " + rule_x.committee().ToString());
    }
  }
  return result;
}

SuiteResult RunPavSuite(std::uint64_t seed, int count) {
  SuiteResult result;
  result.name = "PAV 2-core, Pigou–Dalton, Pareto";
  for (int index = 0; index < count; ++index) {
    const ElectionInstance instance =
        RandomSuiteInstance(seed, index, RandomBounds{});
    ++result.instances;
    for (const Committee& winner : PavWinners(instance)) {
      result.checks += 3;
      if (FindCoreDeviation(instance, winner, Rational(2))) {
        Fail(result, index, instance, "2-core " + winner.ToString());
      }
      if (CheckPigouDalton(instance, winner)) {
        Fail(result, index, instance, "Pigou–Dalton " + winner.ToString());
      }
      if (CheckPareto(instance, winner)) {
        Fail(result, index, instance, "Pareto " + winner.ToString());
      }
    }
  }
  return result;
}

SuiteResult RunRuleXSuite(std::uint64_t seed, int count) {
  SuiteResult result;
  result.name = "Rule X EJR and equal-payment core";
  for (int index = 0; index < count; ++index) {
    const ElectionInstance instance =
        RandomSuiteInstance(seed, index, RandomBounds{});
    ++result.instances;
    const Committee committee = RuleX(instance).committee();
    result.checks += 2;
    if (CheckEjr(instance, committee)) {
      Fail(result, index, instance, "EJR " + committee.ToString());
    }
    if (CheckCoreSubjectTo(instance, committee, DeviationProperty::kPriceEq)) {
      Fail(result, index, instance, "equal-payment core " + committee.ToString());
    }
  }
  return result;
}

SuiteResult RunRuleXCoreBoundSuite(std::uint64_t seed, int count,
                                   std::string* worst) {
  SuiteResult result;
  result.name = "Rule X core factor <= 2·log2(2k) + 1";
  Rational largest(1);
  for (int index = 0; index < count; ++index) {
    const ElectionInstance instance =
        RandomSuiteInstance(seed, index, RandomBounds{});
    ++result.instances;
    ++result.checks;
    const Committee committee = RuleX(instance).committee();
    const auto factor = CoreApproximationThreshold(instance, committee);
    const double bound =
        2 * std::log2(2.0 * instance.committee_size()) + 1;
    if (!factor) {
      Fail(result, index, instance, "unbounded core factor");
      continue;
    }
    if (*factor > largest) largest = *factor;
    if (factor->ToDouble() > bound) {
      Fail(result, index, instance, "core factor " + factor->ToString());
    }
  }
  if (worst != nullptr) *worst = largest.ToString();
  return result;
}

}  // namespace abclab::lab
