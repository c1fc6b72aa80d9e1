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

#include "abclab/laminar.h"

#include <algorithm>
#include <iterator>
#include <map>
#include <numeric>
#include <stdexcept>

namespace abclab {
namespace {

class Recognizer {
 public:
  explicit Recognizer(const ElectionInstance& instance)
      : instance_(instance), removed_(instance.num_candidates(), false) {}

  std::optional<LaminarNode> Build(const std::vector<Voter>& voters,
                                   int seats) {
    std::vector<Ballot> ballots;
    ballots.reserve(voters.size());
    for (Voter v : voters) ballots.push_back(Effective(v));

    LaminarNode node;
    node.voters = voters;
    node.seats = seats;
    if (std::all_of(ballots.begin(), ballots.end(),
                    [&](const Ballot& b) { return b == ballots.front(); })) {
      if (static_cast<int>(ballots.front().size()) < seats) return std::nullopt;
      node.kind = LaminarNode::Kind::kUnanimous;
      node.candidates = ballots.front();
      return node;
    }

    Ballot common = ballots.front();
    for (const Ballot& b : ballots) {
      Ballot kept;
      std::set_intersection(common.begin(), common.end(), b.begin(), b.end(),
                            std::back_inserter(kept));
      common = std::move(kept);
    }
    if (!common.empty()) {
      if (seats == 0) return std::nullopt;
      const Candidate c = common.front();
      removed_[c] = true;
      auto child = Build(voters, seats - 1);
      removed_[c] = false;
      if (!child) return std::nullopt;
      node.kind = LaminarNode::Kind::kCommonCandidate;
      node.candidates = {c};
      node.children.push_back(std::move(*child));
      return node;
    }

    // Voters sharing a candidate must end up on the same side of any split.
    const int size = static_cast<int>(voters.size());
    std::vector<int> parent(size);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::map<Candidate, int> first_holder;
    for (int j = 0; j < size; ++j) {
      for (Candidate c : ballots[j]) {
        auto [it, fresh] = first_holder.emplace(c, j);
        if (!fresh) parent[find(j)] = find(it->second);
      }
    }
    std::map<int, std::vector<Voter>> components;
    for (int j = 0; j < size; ++j) components[find(j)].push_back(voters[j]);
    if (components.size() < 2) return std::nullopt;

    std::vector<std::vector<Voter>> parts;
    for (auto& [root, members] : components) parts.push_back(std::move(members));
    std::sort(parts.begin(), parts.end());
    node.kind = LaminarNode::Kind::kSplit;
    for (auto& part : parts) {
      const long scaled = static_cast<long>(seats) * part.size();
      if (scaled % size != 0) return std::nullopt;
      auto child = Build(part, static_cast<int>(scaled / size));
      if (!child) return std::nullopt;
      node.children.push_back(std::move(*child));
    }
    return node;
  }

 private:
  Ballot Effective(Voter v) const {
    Ballot out;
    for (Candidate c : instance_.ballot(v)) {
      if (!removed_[c]) out.push_back(c);
    }
    return out;
  }

  const ElectionInstance& instance_;
  std::vector<bool> removed_;
};

// Number of committee members accounted for by `node`, or -1 on a mismatch.
int CountProportional(const LaminarNode& node, const Committee& committee) {
  switch (node.kind) {
    case LaminarNode::Kind::kUnanimous: {
      int inside = 0;
      for (Candidate c : node.candidates) inside += committee.Contains(c);
      return inside == node.seats ? inside : -1;
    }
    case LaminarNode::Kind::kCommonCandidate: {
      if (!committee.Contains(node.candidates.front())) return -1;
      const int rest = CountProportional(node.children.front(), committee);
      return rest < 0 ? -1 : rest + 1;
    }
    case LaminarNode::Kind::kSplit: {
      int total = 0;
      for (const LaminarNode& child : node.children) {
        const int used = CountProportional(child, committee);
        if (used < 0) return -1;
        total += used;
      }
      return total;
    }
  }
  return -1;
}

void CollectOptions(const LaminarNode& node, std::vector<Committee>& out,
                    SearchBudget& budget) {
  switch (node.kind) {
    case LaminarNode::Kind::kUnanimous: {
      const int size = static_cast<int>(node.candidates.size());
      std::vector<bool> pick(size, false);
      std::fill(pick.begin(), pick.begin() + node.seats, true);
      do {
        budget.Charge();
        std::vector<Candidate> members;
        for (int j = 0; j < size; ++j) {
          if (pick[j]) members.push_back(node.candidates[j]);
        }
        out.emplace_back(std::move(members));
      } while (std::prev_permutation(pick.begin(), pick.end()));
      return;
    }
    case LaminarNode::Kind::kCommonCandidate: {
      std::vector<Committee> rest;
      CollectOptions(node.children.front(), rest, budget);
      for (const Committee& r : rest) {
        std::vector<Candidate> members = r.members();
        members.push_back(node.candidates.front());
        out.emplace_back(std::move(members));
      }
      return;
    }
    case LaminarNode::Kind::kSplit: {
      std::vector<Committee> product = {Committee()};
      for (const LaminarNode& child : node.children) {
        std::vector<Committee> options;
        CollectOptions(child, options, budget);
        std::vector<Committee> next;
        budget.Charge(product.size() * options.size());
        for (const Committee& left : product) {
          for (const Committee& right : options) {
            std::vector<Candidate> members = left.members();
            members.insert(members.end(), right.begin(), right.end());
            next.emplace_back(std::move(members));
          }
        }
        product = std::move(next);
      }
      out.insert(out.end(), product.begin(), product.end());
      return;
    }
  }
}

}  // namespace

std::optional<LaminarDecomposition> CheckLaminar(
    const ElectionInstance& instance) {
  std::vector<Voter> everyone(instance.num_voters());
  std::iota(everyone.begin(), everyone.end(), 0);
  Recognizer recognizer(instance);
  auto root = recognizer.Build(everyone, instance.committee_size());
  if (!root) return std::nullopt;
  return LaminarDecomposition{std::move(*root)};
}

bool IsLaminarProportional(const LaminarDecomposition& decomposition,
                           const Committee& committee) {
  return CountProportional(decomposition.root, committee) == committee.size();
}

bool CheckLaminarProportional(const ElectionInstance& instance,
                              const Committee& committee) {
  ValidateCommittee(instance, committee);
  const auto decomposition = CheckLaminar(instance);
  if (!decomposition) throw std::invalid_argument("instance is not laminar");
  return IsLaminarProportional(*decomposition, committee);
}

std::vector<Committee> LaminarProportionalCommittees(
    const LaminarDecomposition& decomposition, std::uint64_t budget) {
  SearchBudget nodes(budget, "laminar committee enumeration");
  std::vector<Committee> out;
  CollectOptions(decomposition.root, out, nodes);
  std::sort(out.begin(), out.end());
  return out;
}

bool ApproverSetsLaminar(const ElectionInstance& instance) {
  const int m = instance.num_candidates();
  for (Candidate a = 0; a < m; ++a) {
    const auto& x = instance.approvers(a);
    for (Candidate b = a + 1; b < m; ++b) {
      const auto& y = instance.approvers(b);
      std::vector<Voter> both;
      std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                            std::back_inserter(both));
      if (both.empty()) continue;
      if (both.size() != x.size() && both.size() != y.size()) return false;
    }
  }
  return true;
}

}  // namespace abclab
