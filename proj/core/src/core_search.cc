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
#include <stdexcept>
#include <string>
#include <utility>

#include "abclab/axioms.h"
#include "abclab/lp.h"
#include "bit_profile.h"

namespace abclab {
namespace {

using internal::BitProfile;
using internal::PopCount;

std::uint64_t ColumnMask(const BitProfile& profile,
                         const std::vector<Voter>& voters) {
  std::uint64_t mask = 0;
  for (Voter v : voters) mask |= profile.ballots[v];
  return mask;
}

// Visits candidate sets T ⊆ pool with 1 <= |T| <= max_size, smallest first and
// lexicographically within a size. visit(T) -> true stops the search.
template <typename Visit>
bool ForEachAlternative(std::uint64_t pool, int max_size, SearchBudget& budget,
                        Visit&& visit) {
  const int available = PopCount(pool);
  for (int size = 1; size <= std::min(max_size, available); ++size) {
    const bool stop = internal::ForEachSubsetOfSize(
        pool, size, [&](std::uint64_t t) {
          budget.Charge();
          return visit(t, size);
        });
    if (stop) return true;
  }
  return false;
}

}  // namespace

std::optional<Deviation> FindCoreDeviation(const ElectionInstance& instance,
                                           const Committee& committee,
                                           const Rational& lambda,
                                           std::uint64_t budget) {
  if (lambda < Rational(1)) throw std::invalid_argument("lambda must be >= 1");
  ValidateCommittee(instance, committee);
  const long n = instance.num_voters();
  const long k = instance.committee_size();
  const WelfareVector welfare = ComputeWelfare(instance, committee);
  const bool plain = lambda == Rational(1);

  // Voter v joins S iff |A_v ∩ T| > threshold[v].
  std::vector<int> threshold(n);
  for (Voter v = 0; v < n; ++v) {
    if (plain) {
      threshold[v] = welfare[v];
    } else {
      const mpq_class scaled = lambda.value() * welfare[v];
      const mpz_class floor = scaled.get_num() / scaled.get_den();
      threshold[v] = std::max(1, static_cast<int>(floor.get_si()));
    }
  }
  std::vector<Voter> eligible;
  for (Voter v = 0; v < n; ++v) {
    if (static_cast<int>(instance.ballot(v).size()) > threshold[v]) {
      eligible.push_back(v);
    }
  }
  if (eligible.empty()) return std::nullopt;
  const BitProfile profile = BitProfile::Build(instance, eligible);
  const std::uint64_t pool = ColumnMask(profile, eligible);
  // |S| <= |eligible| caps the size of a blocking T.
  const int max_size = static_cast<int>(
      std::min<long>(k, static_cast<long>(eligible.size()) * k / n));

  SearchBudget nodes(budget, "core search");
  std::optional<Deviation> found;
  ForEachAlternative(pool, max_size, nodes, [&](std::uint64_t t, int size) {
    long members = 0;
    for (Voter v : eligible) {
      if (PopCount(profile.ballots[v] & t) > threshold[v]) ++members;
    }
    if (members * k < size * n) return false;
    Deviation d;
    for (Voter v : eligible) {
      if (PopCount(profile.ballots[v] & t) > threshold[v]) {
        d.coalition.push_back(v);
      }
    }
    d.alternative = profile.Decode(t);
    d.kind = plain ? DeviationKind::kCore : DeviationKind::kLambdaCore;
    found = std::move(d);
    return true;
  });
  return found;
}

bool VerifyDeviation(const ElectionInstance& instance,
                     const Committee& committee, const Deviation& deviation,
                     const Rational& lambda) {
  ValidateCommittee(instance, committee);
  const long n = instance.num_voters();
  const long k = instance.committee_size();
  std::vector<Voter> coalition = deviation.coalition;
  std::vector<Candidate> alternative = deviation.alternative;
  std::sort(coalition.begin(), coalition.end());
  std::sort(alternative.begin(), alternative.end());
  for (Voter v : coalition) {
    if (v < 0 || v >= n) throw std::out_of_range("voter outside instance");
  }
  for (Candidate c : alternative) {
    if (c < 0 || c >= instance.num_candidates()) {
      throw std::out_of_range("candidate outside instance");
    }
  }
  if (coalition.empty() || alternative.empty()) return false;
  if (std::adjacent_find(coalition.begin(), coalition.end()) !=
          coalition.end() ||
      std::adjacent_find(alternative.begin(), alternative.end()) !=
          alternative.end()) {
    return false;
  }
  // (i) |T| <= k|S|/n
  if (static_cast<long>(alternative.size()) * n >
      k * static_cast<long>(coalition.size())) {
    return false;
  }
  // (ii) every member gains
  const WelfareVector welfare = ComputeWelfare(instance, committee);
  const bool plain = lambda == Rational(1);
  for (Voter v : coalition) {
    int gained = 0;
    for (Candidate c : alternative) gained += instance.Approves(v, c) ? 1 : 0;
    if (plain) {
      if (gained <= welfare[v]) return false;
    } else {
      const Rational bar = Max(lambda * Rational(welfare[v]), Rational(1));
      if (!(Rational(gained) > bar)) return false;
    }
  }
  return true;
}

std::optional<Rational> DeviationGainRatio(const ElectionInstance& instance,
                                           const Committee& committee,
                                           const Deviation& deviation) {
  const WelfareVector welfare = ComputeWelfare(instance, committee);
  std::optional<Rational> ratio;
  for (Voter v : deviation.coalition) {
    if (welfare.at(v) == 0) continue;
    int gained = 0;
    for (Candidate c : deviation.alternative) {
      gained += instance.Approves(v, c) ? 1 : 0;
    }
    const Rational r(gained, welfare[v]);
    if (!ratio || r < *ratio) ratio = r;
  }
  return ratio;
}

std::optional<Rational> CoreApproximationThreshold(
    const ElectionInstance& instance, const Committee& committee,
    std::uint64_t budget) {
  ValidateCommittee(instance, committee);
  const long n = instance.num_voters();
  const long k = instance.committee_size();
  const WelfareVector welfare = ComputeWelfare(instance, committee);
  // Voters that can strictly gain at some lambda >= 1 need >= 2 approvals
  // inside T and more than their current utility.
  std::vector<Voter> eligible;
  for (Voter v = 0; v < n; ++v) {
    const int size = static_cast<int>(instance.ballot(v).size());
    if (size >= 2 && size > welfare[v]) eligible.push_back(v);
  }
  Rational best(1);
  if (eligible.empty()) return best;
  const BitProfile profile = BitProfile::Build(instance, eligible);
  const std::uint64_t pool = ColumnMask(profile, eligible);
  const int max_size = static_cast<int>(
      std::min<long>(k, static_cast<long>(eligible.size()) * k / n));

  SearchBudget nodes(budget, "core threshold search");
  bool unbounded = false;
  // Ratios a/u as (a, u); u = 0 stands for +infinity.
  std::vector<std::pair<int, int>> ratios;
  auto greater = [](const std::pair<int, int>& x, const std::pair<int, int>& y) {
    if (x.second == 0 || y.second == 0) return x.second == 0 && y.second != 0;
    return static_cast<long>(x.first) * y.second >
           static_cast<long>(y.first) * x.second;
  };
  ForEachAlternative(pool, max_size, nodes, [&](std::uint64_t t, int size) {
    // S needs at least ceil(size·n/k) members.
    const long needed = (size * n + k - 1) / k;
    ratios.clear();
    for (Voter v : eligible) {
      const int gained = PopCount(profile.ballots[v] & t);
      if (gained >= 2 && gained > welfare[v]) {
        ratios.emplace_back(gained, welfare[v]);
      }
    }
    if (static_cast<long>(ratios.size()) < needed) return false;
    std::nth_element(ratios.begin(), ratios.begin() + (needed - 1),
                     ratios.end(), greater);
    const auto& pivot = ratios[needed - 1];
    if (pivot.second == 0) {
      unbounded = true;
      return true;
    }
    const Rational value(pivot.first, pivot.second);
    if (value > best) best = value;
    return false;
  });
  if (unbounded) return std::nullopt;
  return best;
}

namespace {

// Closed-form equal-payment test: each c in T costs `ratio`, split equally
// among its supporters in S.
bool EqualPaymentsFit(const BitProfile& profile, std::uint64_t t,
                      const std::vector<Voter>& group, const Rational& ratio) {
  std::vector<long> supporters(64, 0);
  for (Voter v : group) {
    std::uint64_t mine = profile.ballots[v] & t;
    while (mine) {
      ++supporters[std::countr_zero(mine)];
      mine &= mine - 1;
    }
  }
  for (std::uint64_t rest = t; rest; rest &= rest - 1) {
    if (supporters[std::countr_zero(rest)] == 0) return false;
  }
  for (Voter v : group) {
    Rational spent;
    std::uint64_t mine = profile.ballots[v] & t;
    while (mine) {
      spent += ratio / Rational(supporters[std::countr_zero(mine)]);
      mine &= mine - 1;
    }
    if (spent > Rational(1)) return false;
  }
  return true;
}

}  // namespace

std::optional<Deviation> CheckCoreSubjectTo(const ElectionInstance& instance,
                                            const Committee& committee,
                                            DeviationProperty property,
                                            const CoreSubjectOptions& options) {
  ValidateCommittee(instance, committee);
  const long n = instance.num_voters();
  const long k = instance.committee_size();
  const WelfareVector welfare = ComputeWelfare(instance, committee);
  std::vector<Voter> eligible;
  for (Voter v = 0; v < n; ++v) {
    if (static_cast<int>(instance.ballot(v).size()) > welfare[v]) {
      eligible.push_back(v);
    }
  }
  if (eligible.empty()) return std::nullopt;
  const BitProfile profile = BitProfile::Build(instance, eligible);
  const std::uint64_t pool = ColumnMask(profile, eligible);
  const int max_size = static_cast<int>(
      std::min<long>(k, static_cast<long>(eligible.size()) * k / n));
  SearchBudget nodes(options.budget, "constrained core search");
  const DeviationKind kind = property == DeviationProperty::kCohesive
                                 ? DeviationKind::kCohesive
                             : property == DeviationProperty::kPriceEq
                                 ? DeviationKind::kPriceEq
                                 : DeviationKind::kPriceable;

  std::optional<Deviation> found;
  ForEachAlternative(pool, max_size, nodes, [&](std::uint64_t t, int size) {
    const long needed = (size * n + k - 1) / k;
    std::vector<Voter> gaining;
    for (Voter v : eligible) {
      if (PopCount(profile.ballots[v] & t) > welfare[v]) gaining.push_back(v);
    }
    if (static_cast<long>(gaining.size()) < needed) return false;

    if (property == DeviationProperty::kCohesive) {
      // Cohesiveness survives shrinking S, so the largest group decides.
      std::vector<Voter> group;
      for (Voter v : gaining) {
        if ((profile.ballots[v] & t) == t) group.push_back(v);
      }
      if (static_cast<long>(group.size()) < needed) return false;
      found = Deviation{std::move(group), profile.Decode(t), kind};
      return true;
    }

    // Equal payments and priceability are not monotone in S: try every
    // large-enough subgroup, largest masks first.
    const int g = static_cast<int>(gaining.size());
    if (g > 24) throw BudgetExceeded("coalition enumeration over " +
                                     std::to_string(g) + " voters");
    const std::uint64_t all = (std::uint64_t{1} << g) - 1;
    for (std::uint64_t pick = all;; pick = (pick - 1) & all) {
      nodes.Charge();
      if (PopCount(pick) >= needed && pick != 0) {
        std::vector<Voter> group;
        for (int j = 0; j < g; ++j) {
          if (pick >> j & 1) group.push_back(gaining[j]);
        }
        bool ok = false;
        if (property == DeviationProperty::kPriceEq) {
          const Rational ratio =
              options.ratio == PriceEqRatio::kOriginal
                  ? Rational(n, k)
                  : Rational(static_cast<long>(group.size()), size);
          ok = EqualPaymentsFit(profile, t, group, ratio);
        } else {
          const ElectionInstance sub = RestrictProfile(instance, group, size);
          ok = CheckPriceable(sub, Committee(profile.Decode(t))).has_value();
        }
        if (ok) {
          found = Deviation{std::move(group), profile.Decode(t), kind};
          return true;
        }
      }
      if (pick == 0) break;
    }
    return false;
  });
  return found;
}

bool DeviationHasProperty(const ElectionInstance& instance,
                          const Deviation& deviation,
                          DeviationProperty property, PriceEqRatio ratio) {
  const auto& group = deviation.coalition;
  const auto& alternative = deviation.alternative;
  if (group.empty() || alternative.empty()) return false;
  switch (property) {
    case DeviationProperty::kCohesive:
      for (Voter v : group) {
        for (Candidate c : alternative) {
          if (!instance.Approves(v, c)) return false;
        }
      }
      return true;
    case DeviationProperty::kPriceEq: {
      // One payment φ_c per candidate of T, equal across its supporters.
      const Rational price =
          ratio == PriceEqRatio::kOriginal
              ? instance.SeatPrice()
              : Rational(static_cast<long>(group.size()),
                         static_cast<long>(alternative.size()));
      const int t = static_cast<int>(alternative.size());
      LinearProgram lp(t);
      for (int j = 0; j < t; ++j) {
        long supporters = 0;
        for (Voter v : group) supporters += instance.Approves(v, alternative[j]);
        if (supporters == 0) {
          lp.AddConstraint({}, Relation::kEqual, price);
        } else {
          lp.AddConstraint({{j, Rational(supporters)}}, Relation::kEqual, price);
        }
      }
      for (Voter v : group) {
        std::vector<LinearTerm> terms;
        for (int j = 0; j < t; ++j) {
          if (instance.Approves(v, alternative[j])) terms.push_back({j, 1});
        }
        lp.AddConstraint(std::move(terms), Relation::kLessEqual, Rational(1));
      }
      return LpFeasible(lp).status == LpStatus::kOptimal;
    }
    case DeviationProperty::kPriceable: {
      const ElectionInstance sub = RestrictProfile(
          instance, group, static_cast<int>(alternative.size()));
      return CheckPriceable(sub, Committee(alternative)).has_value();
    }
  }
  return false;
}

}  // namespace abclab
