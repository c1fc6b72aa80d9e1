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

#ifndef ABCLAB_INSTANCE_H_
#define ABCLAB_INSTANCE_H_

#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "abclab/rational.h"

namespace abclab {

// Candidates and voters are dense 0-based indices.
using Candidate = int;
using Voter = int;
using Ballot = std::vector<Candidate>;  // sorted, no duplicates
using WelfareVector = std::vector<int>;

// An approval election: m candidates, n ballots, committee size k.
// Immutable after construction.
class ElectionInstance {
 public:
  // Throws std::invalid_argument unless 1 <= k <= m, n >= 1 and every ballot
  // holds distinct candidates in range. Ballots are sorted on entry.
  ElectionInstance(int num_candidates, int committee_size,
                   std::vector<Ballot> ballots);

  int num_candidates() const { return num_candidates_; }
  int num_voters() const { return static_cast<int>(ballots_.size()); }
  int committee_size() const { return committee_size_; }

  const std::vector<Ballot>& ballots() const { return ballots_; }
  const Ballot& ballot(Voter v) const { return ballots_.at(v); }
  bool Approves(Voter v, Candidate c) const;

  // N(c), increasing.
  const std::vector<Voter>& approvers(Candidate c) const {
    return approvers_.at(c);
  }

  // n/k, the cost of one seat.
  Rational SeatPrice() const {
    return Rational(num_voters(), committee_size_);
  }

  friend bool operator==(const ElectionInstance& a,
                         const ElectionInstance& b) {
    return a.num_candidates_ == b.num_candidates_ &&
           a.committee_size_ == b.committee_size_ && a.ballots_ == b.ballots_;
  }

 private:
  int num_candidates_;
  int committee_size_;
  std::vector<Ballot> ballots_;
  std::vector<std::vector<Voter>> approvers_;
};

// A set of candidates, kept sorted.
class Committee {
 public:
  Committee() = default;
  explicit Committee(std::vector<Candidate> members);
  Committee(std::initializer_list<Candidate> members)
      : Committee(std::vector<Candidate>(members)) {}

  // Parses `1,2,4,5` (1-based). The empty string is the empty committee.
  static Committee Parse(std::string_view literal);

  // Comma-separated 1-based indices.
  std::string ToString() const;

  const std::vector<Candidate>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool Contains(Candidate c) const;
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend auto operator<=>(const Committee&, const Committee&) = default;

 private:
  std::vector<Candidate> members_;
};

// Throws std::out_of_range when a member is not a candidate of `instance`.
void ValidateCommittee(const ElectionInstance& instance,
                       const Committee& committee);

// Entry i is |A_i ∩ W|.
WelfareVector ComputeWelfare(const ElectionInstance& instance,
                             const Committee& committee);

// The sub-profile of `voters` (kept in increasing order) with committee size
// `new_k`; the candidate set is unchanged.
ElectionInstance RestrictProfile(const ElectionInstance& instance,
                                 std::span<const Voter> voters, int new_k);

// Instance file format: header `m n k`, then one line of increasing 1-based
// candidate indices per voter. Lines starting with '#' are comments.
ElectionInstance ParseInstance(std::string_view text);
std::string SerializeInstance(const ElectionInstance& instance);
ElectionInstance ReadInstanceFile(const std::filesystem::path& path);
void WriteInstanceFile(const ElectionInstance& instance,
                       const std::filesystem::path& path);

// FNV-1a 64 of the serialized instance, as 16 hex digits.
std::string InstanceDigest(const ElectionInstance& instance);

// Renders 0-based indices as a 1-based literal, e.g. `1,2,3`.
std::string IndexList(std::span<const int> indices);

}  // namespace abclab

#endif  // ABCLAB_INSTANCE_H_
