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

#ifndef ABCLAB_AXIOMS_H_
#define ABCLAB_AXIOMS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "abclab/errors.h"
#include "abclab/instance.h"
#include "abclab/rational.h"

namespace abclab {

// A price p and per-voter payments p_i(c).
struct PriceSystem {
  Rational price;
  std::vector<std::map<Candidate, Rational>> payments;  // one map per voter
};

// Maximizes p over price systems supporting `committee`; returns a system iff
// the optimum is positive. The witness is re-checked with SupportsCommittee.
std::optional<PriceSystem> CheckPriceable(const ElectionInstance& instance,
                                          const Committee& committee);

// Direct check of the price-system conditions, without any LP.
bool SupportsCommittee(const ElectionInstance& instance,
                       const Committee& committee, const PriceSystem& system);

enum class DeviationKind { kCore, kLambdaCore, kCohesive, kPriceEq, kPriceable };

std::string_view ToString(DeviationKind kind);

// Coalition S proposing candidate set T.
struct Deviation {
  std::vector<Voter> coalition;
  std::vector<Candidate> alternative;
  DeviationKind kind = DeviationKind::kCore;
};

// Which committee size scales the PJR group threshold ℓ·n/q.
enum class PjrQuota {
  kSeats,          // q = k
  kCommitteeSize,  // q = |W|; the form that priceable committees satisfy
};

// Exhaustive PJR check. A violation is a group S of at least ℓ·n/q voters
// sharing ℓ candidates whose members jointly approve fewer than ℓ members of
// W. The witness's alternative holds the ℓ shared candidates.
std::optional<Deviation> CheckPjr(const ElectionInstance& instance,
                                  const Committee& committee,
                                  PjrQuota quota = PjrQuota::kSeats,
                                  std::uint64_t budget = kDefaultSearchBudget);

// Exhaustive EJR check; the witness is an ℓ-cohesive group in which every
// member has fewer than ℓ representatives.
std::optional<Deviation> CheckEjr(const ElectionInstance& instance,
                                  const Committee& committee,
                                  std::uint64_t budget = kDefaultSearchBudget);

// Searches candidate sets T, smallest first and lexicographically within a
// size. S collects every voter with |A_i ∩ T| > |A_i ∩ W| (lambda = 1) or
// |A_i ∩ T| > max(lambda·|A_i ∩ W|, 1) (lambda > 1); T blocks when
// |S| ≥ |T|·n/k.
std::optional<Deviation> FindCoreDeviation(
    const ElectionInstance& instance, const Committee& committee,
    const Rational& lambda, std::uint64_t budget = kDefaultSearchBudget);

// Checks |T| ≤ k·|S|/n and the per-member gain condition for the given (S, T).
bool VerifyDeviation(const ElectionInstance& instance,
                     const Committee& committee, const Deviation& deviation,
                     const Rational& lambda);

// Smallest lambda ≥ 1 for which no lambda > 1 style deviation exists, i.e.
// W is in the lambda-core for every lambda at or above the result. nullopt
// when some coalition blocks for every lambda.
std::optional<Rational> CoreApproximationThreshold(
    const ElectionInstance& instance, const Committee& committee,
    std::uint64_t budget = kDefaultSearchBudget);

// min over i ∈ S with |A_i ∩ W| > 0 of |A_i ∩ T| / |A_i ∩ W|; nullopt when
// every member of S is unrepresented.
std::optional<Rational> DeviationGainRatio(const ElectionInstance& instance,
                                           const Committee& committee,
                                           const Deviation& deviation);

enum class DeviationProperty { kCohesive, kPriceEq, kPriceable };

std::string_view ToString(DeviationProperty property);

// Which seat price the equal-payment property charges per candidate of T.
enum class PriceEqRatio {
  kOriginal,    // n/k of the full instance
  kRestricted,  // |S|/|T| of the deviating sub-instance
};

struct CoreSubjectOptions {
  PriceEqRatio ratio = PriceEqRatio::kOriginal;
  std::uint64_t budget = kDefaultSearchBudget;
};

// Core deviations (lambda = 1) whose (P|_S, |T|) also has `property`.
std::optional<Deviation> CheckCoreSubjectTo(
    const ElectionInstance& instance, const Committee& committee,
    DeviationProperty property, const CoreSubjectOptions& options = {});

// Whether (S, T) satisfies `property`. Equal payments and priceability are
// decided by LP here; the search above uses closed forms where available.
bool DeviationHasProperty(const ElectionInstance& instance,
                          const Deviation& deviation,
                          DeviationProperty property,
                          PriceEqRatio ratio = PriceEqRatio::kOriginal);

// A same-size committee whose welfare differs in exactly two voters, moving
// utility from the better-off voter to the worse-off one without reversing
// their order. Lexicographically first such committee.
std::optional<Committee> CheckPigouDalton(
    const ElectionInstance& instance, const Committee& committee,
    std::uint64_t budget = kDefaultSearchBudget);

// A same-size committee weakly better for every voter and strictly better for
// one. Lexicographically first such committee.
std::optional<Committee> CheckPareto(const ElectionInstance& instance,
                                     const Committee& committee,
                                     std::uint64_t budget = kDefaultSearchBudget);

// Independent welfare-level checks used to re-validate committee witnesses.
bool IsPigouDaltonTransfer(const WelfareVector& before,
                           const WelfareVector& after);
bool ParetoDominates(const WelfareVector& better, const WelfareVector& worse);

}  // namespace abclab

#endif  // ABCLAB_AXIOMS_H_
