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

#include "search.h"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "abclab/axioms.h"
#include "abclab/rules.h"

namespace abclab::lab {
namespace {

struct Named {
  std::string_view name;
  int value;
};

constexpr Named kRules[] = {
    {"pav", static_cast<int>(SearchRule::kPav)},
    {"seqpav", static_cast<int>(SearchRule::kSeqPav)},
    {"phragmen", static_cast<int>(SearchRule::kPhragmen)},
    {"rulex", static_cast<int>(SearchRule::kRuleX)},
    {"rulex-complete", static_cast<int>(SearchRule::kRuleXComplete)},
};

constexpr Named kAxioms[] = {
    {"ejr", static_cast<int>(SearchAxiom::kEjr)},
    {"pjr", static_cast<int>(SearchAxiom::kPjr)},
    {"core", static_cast<int>(SearchAxiom::kCore)},
    {"core2", static_cast<int>(SearchAxiom::kCore2)},
    {"pigou-dalton", static_cast<int>(SearchAxiom::kPigouDalton)},
    {"pareto", static_cast<int>(SearchAxiom::kPareto)},
    {"priceable", static_cast<int>(SearchAxiom::kPriceable)},
    {"price-eq", static_cast<int>(SearchAxiom::kPriceEq)},
};

template <std::size_t N>
int Lookup(const Named (&table)[N], std::string_view name,
           std::string_view what) {
  for (const Named& entry : table) {
    if (entry.name == name) return entry.value;
  }
  throw std::invalid_argument("unknown " + std::string(what) + " '" +
                              std::string(name) + "'");
}

template <std::size_t N>
std::string_view NameOf(const Named (&table)[N], int value) {
  for (const Named& entry : table) {
    if (entry.value == value) return entry.name;
  }
  return "?";
}

std::string Render(const Deviation& deviation) {
  return "S=" + IndexList(deviation.coalition) +
         " T=" + IndexList(deviation.alternative);
}

std::vector<Committee> RuleOutputs(const ElectionInstance& instance,
                                   SearchRule rule, std::uint64_t budget) {
  switch (rule) {
    case SearchRule::kPav:
      return PavWinners(instance, budget);
    case SearchRule::kSeqPav:
      return {SequentialPav(instance)};
    case SearchRule::kPhragmen:
      return {PhragmenSequential(instance).committee()};
    case SearchRule::kRuleX:
      return {RuleX(instance).committee()};
    case SearchRule::kRuleXComplete:
      return {RuleXComplete(instance, Completion::kPhragmenContinuation)
                  .committee()};
  }
  return {};
}

std::optional<std::string> AxiomFailure(const ElectionInstance& instance,
                                        const Committee& committee,
                                        SearchAxiom axiom,
                                        std::uint64_t budget) {
  std::optional<Deviation> deviation;
  switch (axiom) {
    case SearchAxiom::kEjr:
      deviation = CheckEjr(instance, committee, budget);
      break;
    case SearchAxiom::kPjr:
      deviation = CheckPjr(instance, committee, PjrQuota::kSeats, budget);
      break;
    case SearchAxiom::kCore:
      deviation = FindCoreDeviation(instance, committee, Rational(1), budget);
      break;
    case SearchAxiom::kCore2:
      deviation = FindCoreDeviation(instance, committee, Rational(2), budget);
      break;
    case SearchAxiom::kPriceEq:
      deviation = CheckCoreSubjectTo(instance, committee,
                                     DeviationProperty::kPriceEq,
                                     CoreSubjectOptions{.budget = budget});
      break;
    case SearchAxiom::kPigouDalton:
      if (auto other = CheckPigouDalton(instance, committee, budget)) {
        return "transfer to " + other->ToString();
      }
      return std::nullopt;
    case SearchAxiom::kPareto:
      if (auto other = CheckPareto(instance, committee, budget)) {
        return "dominated by " + other->ToString();
      }
      return std::nullopt;
    case SearchAxiom::kPriceable:
      if (!CheckPriceable(instance, committee)) return "no price system";
      return std::nullopt;
  }
  if (deviation) return Render(*deviation);
  return std::nullopt;
}

using Key = std::tuple<int, int, int, int, std::string>;

Key KeyOf(const ElectionInstance& instance) {
  const int n = instance.num_voters();
  const int m = instance.num_candidates();
  return {n + m, n, m, instance.committee_size(), SerializeInstance(instance)};
}

std::optional<ElectionInstance> TryBuild(int m, int k,
                                         std::vector<Ballot> ballots) {
  if (ballots.empty() || k < 1 || k > m) return std::nullopt;
  return ElectionInstance(m, k, std::move(ballots));
}

// Greedy shrinking: drop a voter, drop a candidate, or lower k while the
// violation persists; repeat until nothing applies.
ElectionInstance Shrink(ElectionInstance instance, const Violation& violation,
                        std::uint64_t budget) {
  auto fails = [&](const ElectionInstance& candidate) {
    try {
      return CheckViolation(candidate, violation, budget).has_value();
    } catch (const BudgetExceeded&) {
      return false;
    }
  };
  bool changed = true;
  while (changed) {
    changed = false;
    const int n = instance.num_voters();
    const int m = instance.num_candidates();
    const int k = instance.committee_size();
    for (Voter drop = 0; drop < n && !changed; ++drop) {
      std::vector<Ballot> ballots = instance.ballots();
      ballots.erase(ballots.begin() + drop);
      auto smaller = TryBuild(m, k, std::move(ballots));
      if (smaller && fails(*smaller)) {
        instance = std::move(*smaller);
        changed = true;
      }
    }
    for (Candidate drop = 0; drop < m && !changed; ++drop) {
      std::vector<Ballot> ballots;
      for (const Ballot& ballot : instance.ballots()) {
        Ballot kept;
        for (Candidate c : ballot) {
          if (c != drop) kept.push_back(c < drop ? c : c - 1);
        }
        ballots.push_back(std::move(kept));
      }
      auto smaller = TryBuild(m - 1, k, std::move(ballots));
      if (smaller && fails(*smaller)) {
        instance = std::move(*smaller);
        changed = true;
      }
    }
    if (!changed && k > 1) {
      auto smaller = TryBuild(m, k - 1, instance.ballots());
      if (smaller && fails(*smaller)) {
        instance = std::move(*smaller);
        changed = true;
      }
    }
  }
  return instance;
}

class Collector {
 public:
  Collector(const Violation& violation, std::uint64_t budget)
      : violation_(violation), budget_(budget) {}

  // Returns true when `instance` violates; keeps the smallest shrunk hit.
  bool Offer(const ElectionInstance& instance, std::string_view phase) {
    std::optional<Counterexample> found;
    try {
      found = CheckViolation(instance, violation_, budget_);
    } catch (const BudgetExceeded&) {
      return false;
    }
    if (!found) return false;
    ElectionInstance small = Shrink(instance, violation_, budget_);
    Key key = KeyOf(small);
    if (!best_key_ || key < *best_key_) {
      best_key_ = std::move(key);
      result_.counterexample = CheckViolation(small, violation_, budget_);
      result_.instance = std::move(small);
      result_.phase = phase;
    }
    return true;
  }

  bool found() const { return result_.instance.has_value(); }
  SearchResult& result() { return result_; }

 private:
  Violation violation_;
  std::uint64_t budget_;
  std::optional<Key> best_key_;
  SearchResult result_;
};

void ExhaustivePhase(const SearchOptions& options, Collector& collector) {
  const RandomBounds& bounds = options.bounds;
  for (int n = 1; n <= bounds.max_n; ++n) {
    for (int m = 1; m <= bounds.max_m && n * m <= 12; ++m) {
      for (int k = 1; k <= std::min(m, bounds.max_k); ++k) {
        for (std::uint32_t bits = 0; bits < (1u << (n * m)); ++bits) {
          std::vector<Ballot> ballots(n);
          for (int v = 0; v < n; ++v) {
            for (int c = 0; c < m; ++c) {
              if (bits >> (v * m + c) & 1) ballots[v].push_back(c);
            }
          }
          ++collector.result().exhaustive_instances;
          collector.Offer(ElectionInstance(m, k, std::move(ballots)),
                          "exhaustive");
        }
      }
    }
  }
}

// Group G = voters [0, s) approves `shared` candidates numbered last, which
// nobody else approves; every ballot also holds a subset (bit mask) of the
// other candidates. Phragmén is simulated on the other candidates only, in
// double precision; the margin is non-negative when G never collects the price
// of a shared candidate before k seats are filled and no member of G ends
// with `shared` or more representatives. Hits are re-checked exactly.
class PlantedGroupModel {
 public:
  PlantedGroupModel(int n, int m, int k, int shared)
      : n_(n), k_(k), shared_(shared), others_(m - shared),
        group_((shared * n + k - 1) / k) {}

  bool viable() const {
    return group_ >= 2 && group_ < n_ && others_ >= k_ && others_ <= 30;
  }

  double Margin(const std::vector<std::uint32_t>& masks) const {
    const double price = static_cast<double>(n_) / k_;
    std::vector<double> last(n_, 0.0);
    std::vector<int> reps(n_, 0);
    std::uint32_t elected = 0;
    double worst = -1e18;
    for (int seat = 0; seat < k_; ++seat) {
      double best = 1e18;
      int pick = -1;
      for (int c = 0; c < others_; ++c) {
        if (elected >> c & 1) continue;
        int count = 0;
        double spent = 0;
        for (int v = 0; v < n_; ++v) {
          if (masks[v] >> c & 1) {
            ++count;
            spent += last[v];
          }
        }
        if (count == 0) continue;
        const double time = (price + spent) / count;
        if (time < best - 1e-12) {
          best = time;
          pick = c;
        }
      }
      if (pick < 0) return -1e9;
      double spent = 0;
      for (int v = 0; v < group_; ++v) spent += last[v];
      worst = std::max(worst, best - (price + spent) / group_);
      elected |= 1u << pick;
      for (int v = 0; v < n_; ++v) {
        if (masks[v] >> pick & 1) {
          last[v] = best;
          ++reps[v];
        }
      }
    }
    double penalty = 0;
    for (int v = 0; v < group_; ++v) penalty += reps[v] >= shared_ ? 1 : 0;
    return -worst - penalty;
  }

  ElectionInstance Build(const std::vector<std::uint32_t>& masks) const {
    std::vector<Ballot> ballots(n_);
    for (int v = 0; v < n_; ++v) {
      for (int c = 0; c < others_; ++c) {
        if (masks[v] >> c & 1) ballots[v].push_back(c);
      }
      if (v < group_) {
        for (int j = 0; j < shared_; ++j) ballots[v].push_back(others_ + j);
      }
    }
    return ElectionInstance(others_ + shared_, k_, std::move(ballots));
  }

  int n() const { return n_; }
  int others() const { return others_; }

 private:
  int n_, k_, shared_, others_, group_;
};

// One threshold-accepting descent; returns the final masks when the margin
// turned positive.
std::optional<std::vector<std::uint32_t>> Descend(
    const PlantedGroupModel& model, std::mt19937_64& rng) {
  constexpr int kSteps = 20'000;
  const std::uint32_t full = (1u << model.others()) - 1;
  std::vector<std::uint32_t> masks(model.n());
  for (auto& mask : masks) {
    mask = static_cast<std::uint32_t>(rng()) & full;
    if (mask == 0) mask = 1;
  }
  double current = model.Margin(masks);
  for (int step = 0; step < kSteps; ++step) {
    const double threshold =
        0.015 * (1.0 - static_cast<double>(step) / kSteps) + 5e-6;
    std::vector<std::uint32_t> next = masks;
    const int voter = static_cast<int>(rng() % model.n());
    next[voter] ^= 1u << (rng() % model.others());
    if (rng() % 3 == 0) {
      next[rng() % model.n()] ^= 1u << (rng() % model.others());
    }
    if (next[voter] == 0) continue;
    const double margin = model.Margin(next);
    if (margin >= current - threshold) {
      masks = std::move(next);
      current = margin;
    }
    // Ties go against the shared candidates, so zero margin may already
    // be a counterexample; the exact check decides.
    if (current > -1e-9) return masks;
  }
  return std::nullopt;
}

void GuidedPhase(const SearchOptions& options, Collector& collector) {
  const RandomBounds& bounds = options.bounds;
  // Smallest configurations first; the first validated hit ends the phase.
  struct Config {
    int n, m, k, shared;
  };
  std::vector<Config> configs;
  for (int n = 2; n <= bounds.max_n; ++n) {
    for (int m = 3; m <= bounds.max_m; ++m) {
      for (int k = 2; k <= std::min(m, bounds.max_k); ++k) {
        for (int shared = 2; shared <= 3; ++shared) {
          if (PlantedGroupModel(n, m, k, shared).viable()) {
            configs.push_back({n, m, k, shared});
          }
        }
      }
    }
  }
  std::stable_sort(configs.begin(), configs.end(),
                   [](const Config& a, const Config& b) {
                     return std::make_tuple(a.n + a.m, a.n, a.m, a.k) <
                            std::make_tuple(b.n + b.m, b.n, b.m, b.k);
                   });
  const std::uint64_t restarts =
      std::max<std::uint64_t>(1, options.trials / 50'000);
  for (std::size_t i = 0; i < configs.size(); ++i) {
    const Config& config = configs[i];
    const PlantedGroupModel model(config.n, config.m, config.k, config.shared);
    for (std::uint64_t restart = 0; restart < restarts; ++restart) {
      std::seed_seq sequence{static_cast<std::uint32_t>(options.seed),
                             static_cast<std::uint32_t>(options.seed >> 32),
                             static_cast<std::uint32_t>(restart),
                             static_cast<std::uint32_t>(i), 0x9e37u};
      std::mt19937_64 rng(sequence);
      ++collector.result().guided_restarts;
      if (auto masks = Descend(model, rng)) {
        if (collector.Offer(model.Build(*masks), "guided")) return;
      }
    }
  }
}

}  // namespace

Violation ParseViolation(std::string_view text) {
  if (text == "ejr-phragmen") return {SearchAxiom::kEjr, SearchRule::kPhragmen};
  const auto plus = text.find('+');
  if (plus == std::string_view::npos) {
    throw std::invalid_argument("violation must be ejr-phragmen or axiom+rule");
  }
  return {static_cast<SearchAxiom>(
              Lookup(kAxioms, text.substr(0, plus), "axiom")),
          static_cast<SearchRule>(
              Lookup(kRules, text.substr(plus + 1), "rule"))};
}

std::string ToString(const Violation& violation) {
  return std::string(NameOf(kAxioms, static_cast<int>(violation.axiom))) +
         "+" + std::string(NameOf(kRules, static_cast<int>(violation.rule)));
}

std::optional<Counterexample> CheckViolation(const ElectionInstance& instance,
                                             const Violation& violation,
                                             std::uint64_t budget) {
  for (const Committee& committee :
       RuleOutputs(instance, violation.rule, budget)) {
    if (auto witness =
            AxiomFailure(instance, committee, violation.axiom, budget)) {
      return Counterexample{committee, *witness};
    }
  }
  return std::nullopt;
}

SearchResult RunSearch(const SearchOptions& options) {
  const RandomBounds& bounds = options.bounds;
  if (bounds.max_n < 1 || bounds.max_m < 1 || bounds.max_k < 1) {
    throw std::invalid_argument("search bounds must be positive");
  }
  Collector collector(options.violation, options.budget);
  ExhaustivePhase(options, collector);
  for (std::uint64_t trial = 0; trial < options.trials; ++trial) {
    ++collector.result().random_trials;
    collector.Offer(SearchInstance(options.seed, trial, bounds), "random");
  }
  if (!collector.found() && options.violation.axiom == SearchAxiom::kEjr &&
      options.violation.rule == SearchRule::kPhragmen) {
    GuidedPhase(options, collector);
  }
  return std::move(collector.result());
}

}  // namespace abclab::lab
