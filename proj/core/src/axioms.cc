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

#include "abclab/axioms.h"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "abclab/lp.h"
#include "bit_profile.h"

namespace abclab {

std::string_view ToString(DeviationKind kind) {
  switch (kind) {
    case DeviationKind::kCore:
      return "core";
    case DeviationKind::kLambdaCore:
      return "lambda_core";
    case DeviationKind::kCohesive:
      return "cohesive";
    case DeviationKind::kPriceEq:
      return "price_eq";
    case DeviationKind::kPriceable:
      return "priceable";
  }
  return "unknown";
}

std::string_view ToString(DeviationProperty property) {
  switch (property) {
    case DeviationProperty::kCohesive:
      return "cohesive";
    case DeviationProperty::kPriceEq:
      return "price_eq";
    case DeviationProperty::kPriceable:
      return "priceable";
  }
  return "unknown";
}

bool SupportsCommittee(const ElectionInstance& instance,
                       const Committee& committee, const PriceSystem& system) {
  const int n = instance.num_voters();
  const int m = instance.num_candidates();
  if (system.price.sign() <= 0) return false;
  if (static_cast<int>(system.payments.size()) != n) return false;

  std::vector<Rational> collected(m);
  std::vector<Rational> spent(n);
  for (Voter v = 0; v < n; ++v) {
    for (const auto& [c, amount] : system.payments[v]) {
      if (c < 0 || c >= m || amount.sign() < 0) return false;
      if (amount.is_zero()) continue;
      if (!instance.Approves(v, c)) return false;
      collected[c] += amount;
      spent[v] += amount;
    }
    if (spent[v] > Rational(1)) return false;
  }
  for (Candidate c = 0; c < m; ++c) {
    if (committee.Contains(c)) {
      if (collected[c] != system.price) return false;
      continue;
    }
    if (!collected[c].is_zero()) return false;
    Rational unspent;
    for (Voter v : instance.approvers(c)) unspent += Rational(1) - spent[v];
    if (unspent > system.price) return false;
  }
  return true;
}

std::optional<PriceSystem> CheckPriceable(const ElectionInstance& instance,
                                          const Committee& committee) {
  ValidateCommittee(instance, committee);
  const int n = instance.num_voters();
  const int m = instance.num_candidates();

  if (committee.empty()) {
    // Nobody pays; any price covering the largest approver set works.
    int largest = 1;
    for (Candidate c = 0; c < m; ++c) {
      largest = std::max(largest, static_cast<int>(instance.approvers(c).size()));
    }
    return PriceSystem{Rational(largest),
                       std::vector<std::map<Candidate, Rational>>(n)};
  }

  // Variable 0 is the price; then one payment per (voter, approved member).
  std::vector<std::vector<std::pair<Candidate, int>>> payment_vars(n);
  int variables = 1;
  for (Voter v = 0; v < n; ++v) {
    for (Candidate c : instance.ballot(v)) {
      if (committee.Contains(c)) payment_vars[v].emplace_back(c, variables++);
    }
  }
  LinearProgram lp(variables);
  lp.SetObjectiveCoefficient(0, Rational(1));

  for (Voter v = 0; v < n; ++v) {
    if (payment_vars[v].empty()) continue;
    std::vector<LinearTerm> terms;
    for (const auto& [c, var] : payment_vars[v]) terms.push_back({var, 1});
    lp.AddConstraint(std::move(terms), Relation::kLessEqual, Rational(1));
  }
  for (Candidate c : committee) {
    std::vector<LinearTerm> terms{{0, -1}};
    for (Voter v : instance.approvers(c)) {
      for (const auto& [paid_for, var] : payment_vars[v]) {
        if (paid_for == c) terms.push_back({var, 1});
      }
    }
    lp.AddConstraint(std::move(terms), Relation::kEqual, Rational(0));
  }
  // Unspent money of N(c) is at most p; identical approver sets give
  // identical rows.
  std::map<std::vector<Voter>, bool> seen;
  for (Candidate c = 0; c < m; ++c) {
    const auto& supporters = instance.approvers(c);
    if (committee.Contains(c) || supporters.empty()) continue;
    if (!seen.emplace(supporters, true).second) continue;
    std::vector<LinearTerm> terms{{0, -1}};
    for (Voter v : supporters) {
      for (const auto& [paid_for, var] : payment_vars[v]) {
        terms.push_back({var, -1});
      }
    }
    lp.AddConstraint(std::move(terms), Relation::kLessEqual,
                     Rational(-static_cast<long>(supporters.size())));
  }

  const LpOutcome outcome = LpMaximize(lp);
  if (outcome.status != LpStatus::kOptimal || outcome.value.sign() <= 0) {
    return std::nullopt;
  }
  PriceSystem system{outcome.assignment[0],
                     std::vector<std::map<Candidate, Rational>>(n)};
  for (Voter v = 0; v < n; ++v) {
    for (const auto& [c, var] : payment_vars[v]) {
      if (!outcome.assignment[var].is_zero()) {
        system.payments[v][c] = outcome.assignment[var];
      }
    }
  }
  if (!SupportsCommittee(instance, committee, system)) {
    throw std::logic_error("priceability LP returned an invalid price system");
  }
  return system;
}

namespace {

// Depth-first enumeration of candidate sets T of a fixed size, in
// lexicographic order, tracking the voters that approve all of T.
class CohesiveSearch {
 public:
  CohesiveSearch(const ElectionInstance& instance, SearchBudget& budget)
      : instance_(instance), budget_(budget) {}

  // visit(T, voters approving all of T) -> true to stop. keep(voters) -> false
  // prunes the subtree.
  template <typename Keep, typename Visit>
  bool Run(int size, Keep&& keep, Visit&& visit) {
    std::vector<Voter> everyone(instance_.num_voters());
    for (Voter v = 0; v < instance_.num_voters(); ++v) everyone[v] = v;
    std::vector<Candidate> chosen;
    return Descend(0, size, everyone, chosen, keep, visit);
  }

 private:
  template <typename Keep, typename Visit>
  bool Descend(Candidate next, int size, const std::vector<Voter>& voters,
               std::vector<Candidate>& chosen, Keep& keep, Visit& visit) {
    budget_.Charge();
    if (static_cast<int>(chosen.size()) == size) return visit(chosen, voters);
    const int missing = size - static_cast<int>(chosen.size());
    for (Candidate c = next; c + missing <= instance_.num_candidates(); ++c) {
      std::vector<Voter> remaining;
      for (Voter v : voters) {
        if (instance_.Approves(v, c)) remaining.push_back(v);
      }
      if (remaining.empty() || !keep(remaining)) continue;
      chosen.push_back(c);
      const bool stop = Descend(c + 1, size, remaining, chosen, keep, visit);
      chosen.pop_back();
      if (stop) return true;
    }
    return false;
  }

  const ElectionInstance& instance_;
  SearchBudget& budget_;
};

}  // namespace

std::optional<Deviation> CheckPjr(const ElectionInstance& instance,
                                  const Committee& committee, PjrQuota quota,
                                  std::uint64_t budget) {
  ValidateCommittee(instance, committee);
  const long n = instance.num_voters();
  const long q = quota == PjrQuota::kSeats ? instance.committee_size()
                                           : committee.size();
  if (q == 0) return std::nullopt;  // threshold ℓ·n/0 is never met
  SearchBudget nodes(budget, "PJR search");

  // Members of W each voter approves.
  std::vector<std::vector<Candidate>> represented(n);
  for (Voter v = 0; v < n; ++v) {
    for (Candidate c : instance.ballot(v)) {
      if (committee.Contains(c)) represented[v].push_back(c);
    }
  }

  std::optional<Deviation> found;
  CohesiveSearch search(instance, nodes);
  for (int l = 1; l <= instance.num_candidates() && !found; ++l) {
    if (q * n < static_cast<long>(l) * n) break;  // |S| <= n < l·n/q
    auto large_enough = [&](const std::vector<Voter>& s) {
      return static_cast<long>(s.size()) * q >= l * n;
    };
    search.Run(l, large_enough, [&](const std::vector<Candidate>& shared,
                                    const std::vector<Voter>& voters) {
      std::vector<Candidate> covered;
      for (Voter v : voters) {
        covered.insert(covered.end(), represented[v].begin(),
                       represented[v].end());
      }
      std::sort(covered.begin(), covered.end());
      covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
      auto report = [&](std::vector<Voter> group) {
        found = Deviation{std::move(group), shared, DeviationKind::kCohesive};
        return true;
      };
      if (static_cast<int>(covered.size()) < l) return report(voters);
      // Otherwise keep only voters whose representatives fit in some
      // (l-1)-subset X of the covered members.
      const int pool = static_cast<int>(covered.size());
      if (pool > 62) throw BudgetExceeded("PJR cover enumeration");
      nodes.Require(internal::Binomial(pool, l - 1));
      return internal::ForEachSubsetOfSize(
          (pool == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << pool) - 1),
          l - 1, [&](std::uint64_t x) {
            nodes.Charge();
            std::vector<Voter> group;
            for (Voter v : voters) {
              bool inside = true;
              for (Candidate c : represented[v]) {
                const int j = static_cast<int>(
                    std::lower_bound(covered.begin(), covered.end(), c) -
                    covered.begin());
                if (!(x >> j & 1)) {
                  inside = false;
                  break;
                }
              }
              if (inside) group.push_back(v);
            }
            if (static_cast<long>(group.size()) * q >= l * n) {
              return report(std::move(group));
            }
            return false;
          });
    });
  }
  return found;
}

std::optional<Deviation> CheckEjr(const ElectionInstance& instance,
                                  const Committee& committee,
                                  std::uint64_t budget) {
  ValidateCommittee(instance, committee);
  const long n = instance.num_voters();
  const long k = instance.committee_size();
  const WelfareVector welfare = ComputeWelfare(instance, committee);
  SearchBudget nodes(budget, "EJR search");
  CohesiveSearch search(instance, nodes);
  std::optional<Deviation> found;
  for (int l = 1; l <= k && !found; ++l) {
    auto underserved = [&](const std::vector<Voter>& voters) {
      std::vector<Voter> group;
      for (Voter v : voters) {
        if (welfare[v] < l) group.push_back(v);
      }
      return group;
    };
    auto large_enough = [&](const std::vector<Voter>& voters) {
      return static_cast<long>(underserved(voters).size()) * k >= l * n;
    };
    search.Run(l, large_enough, [&](const std::vector<Candidate>& shared,
                                    const std::vector<Voter>& voters) {
      std::vector<Voter> group = underserved(voters);
      if (static_cast<long>(group.size()) * k < l * n) return false;
      found = Deviation{std::move(group), shared, DeviationKind::kCohesive};
      return true;
    });
  }
  return found;
}

bool IsPigouDaltonTransfer(const WelfareVector& before,
                           const WelfareVector& after) {
  if (before.size() != after.size()) return false;
  std::vector<std::size_t> changed;
  for (std::size_t i = 0; i < before.size(); ++i) {
    if (before[i] != after[i]) changed.push_back(i);
  }
  if (changed.size() != 2) return false;
  std::size_t richer = changed[0];
  std::size_t poorer = changed[1];
  if (after[richer] > before[richer]) std::swap(richer, poorer);
  const int moved = before[richer] - after[richer];
  return moved > 0 && after[poorer] - before[poorer] == moved &&
         before[richer] > before[poorer] && after[richer] >= after[poorer];
}

bool ParetoDominates(const WelfareVector& better, const WelfareVector& worse) {
  if (better.size() != worse.size()) return false;
  bool strict = false;
  for (std::size_t i = 0; i < better.size(); ++i) {
    if (better[i] < worse[i]) return false;
    if (better[i] > worse[i]) strict = true;
  }
  return strict;
}

namespace {

// First same-size committee (lexicographic) whose welfare satisfies `accept`.
template <typename Accept>
std::optional<Committee> FirstSameSizeCommittee(
    const ElectionInstance& instance, const Committee& committee,
    std::uint64_t budget, const char* label, Accept&& accept) {
  ValidateCommittee(instance, committee);
  const int m = instance.num_candidates();
  const int size = committee.size();
  SearchBudget nodes(budget, label);
  nodes.Require(internal::Binomial(m, size));
  const WelfareVector base = ComputeWelfare(instance, committee);

  std::vector<int> index(size);
  for (int j = 0; j < size; ++j) index[j] = j;
  WelfareVector welfare(instance.num_voters());
  while (true) {
    nodes.Charge();
    std::fill(welfare.begin(), welfare.end(), 0);
    for (int c : index) {
      for (Voter v : instance.approvers(c)) ++welfare[v];
    }
    if (accept(base, welfare)) return Committee(index);
    int j = size - 1;
    while (j >= 0 && index[j] == m - size + j) --j;
    if (j < 0) return std::nullopt;
    ++index[j];
    for (int t = j + 1; t < size; ++t) index[t] = index[t - 1] + 1;
  }
}

}  // namespace

std::optional<Committee> CheckPigouDalton(const ElectionInstance& instance,
                                          const Committee& committee,
                                          std::uint64_t budget) {
  return FirstSameSizeCommittee(instance, committee, budget,
                                "Pigou-Dalton search",
                                [](const WelfareVector& before,
                                   const WelfareVector& after) {
                                  return IsPigouDaltonTransfer(before, after);
                                });
}

std::optional<Committee> CheckPareto(const ElectionInstance& instance,
                                     const Committee& committee,
                                     std::uint64_t budget) {
  return FirstSameSizeCommittee(
      instance, committee, budget, "Pareto search",
      [](const WelfareVector& before, const WelfareVector& after) {
        return ParetoDominates(after, before);
      });
}

}  // namespace abclab
