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

#include "abclab/instance.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "abclab/errors.h"

namespace abclab {

ElectionInstance::ElectionInstance(int num_candidates, int committee_size,
                                   std::vector<Ballot> ballots)
    : num_candidates_(num_candidates),
      committee_size_(committee_size),
      ballots_(std::move(ballots)) {
  if (num_candidates_ < 1) {
    throw std::invalid_argument("an instance needs at least one candidate");
  }
  if (ballots_.empty()) {
    throw std::invalid_argument("an instance needs at least one voter");
  }
  if (committee_size_ < 1 || committee_size_ > num_candidates_) {
    throw std::invalid_argument("committee size " +
                                std::to_string(committee_size_) +
                                " outside 1.." + std::to_string(num_candidates_));
  }
  approvers_.assign(num_candidates_, {});
  for (Voter v = 0; v < num_voters(); ++v) {
    auto& ballot = ballots_[v];
    std::sort(ballot.begin(), ballot.end());
    if (std::adjacent_find(ballot.begin(), ballot.end()) != ballot.end()) {
      throw std::invalid_argument("voter " + std::to_string(v + 1) +
                                  " approves a candidate twice");
    }
    for (Candidate c : ballot) {
      if (c < 0 || c >= num_candidates_) {
        throw std::invalid_argument("voter " + std::to_string(v + 1) +
                                    " approves unknown candidate " +
                                    std::to_string(c + 1));
      }
      approvers_[c].push_back(v);
    }
  }
}

bool ElectionInstance::Approves(Voter v, Candidate c) const {
  const auto& b = ballots_.at(v);
  return std::binary_search(b.begin(), b.end(), c);
}

Committee::Committee(std::vector<Candidate> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw std::invalid_argument("committee lists a candidate twice");
  }
}

Committee Committee::Parse(std::string_view literal) {
  std::vector<Candidate> members;
  while (!literal.empty()) {
    const auto comma = literal.find(',');
    std::string_view token = literal.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() ||
        ptr != token.data() + token.size() || value < 1) {
      throw std::invalid_argument("bad committee entry '" +
                                  std::string(token) + "'");
    }
    members.push_back(value - 1);
    if (comma == std::string_view::npos) break;
    literal.remove_prefix(comma + 1);
  }
  return Committee(std::move(members));
}

std::string Committee::ToString() const { return IndexList(members_); }

bool Committee::Contains(Candidate c) const {
  return std::binary_search(members_.begin(), members_.end(), c);
}

void ValidateCommittee(const ElectionInstance& instance,
                       const Committee& committee) {
  for (Candidate c : committee) {
    if (c < 0 || c >= instance.num_candidates()) {
      throw std::out_of_range("committee member " + std::to_string(c + 1) +
                              " is not a candidate");
    }
  }
  if (committee.size() > instance.committee_size()) {
    throw std::out_of_range("committee has " + std::to_string(committee.size()) +
                            " members, more than k = " +
                            std::to_string(instance.committee_size()));
  }
}

WelfareVector ComputeWelfare(const ElectionInstance& instance,
                             const Committee& committee) {
  for (Candidate c : committee) {
    if (c < 0 || c >= instance.num_candidates()) {
      throw std::out_of_range("committee member " + std::to_string(c + 1) +
                              " is not a candidate");
    }
  }
  WelfareVector welfare(instance.num_voters(), 0);
  for (Candidate c : committee) {
    for (Voter v : instance.approvers(c)) ++welfare[v];
  }
  return welfare;
}

ElectionInstance RestrictProfile(const ElectionInstance& instance,
                                 std::span<const Voter> voters, int new_k) {
  if (voters.empty()) throw std::invalid_argument("empty voter set");
  std::vector<Voter> sorted(voters.begin(), voters.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("voter listed twice");
  }
  std::vector<Ballot> ballots;
  ballots.reserve(sorted.size());
  for (Voter v : sorted) {
    if (v < 0 || v >= instance.num_voters()) {
      throw std::out_of_range("voter " + std::to_string(v + 1) +
                              " does not exist");
    }
    ballots.push_back(instance.ballot(v));
  }
  return ElectionInstance(instance.num_candidates(), new_k, std::move(ballots));
}

namespace {

std::string_view TrimRight(std::string_view s) {
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r' || s.back() == '\v' ||
                        s.back() == '\f')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<long long> ParseNumbers(std::string_view line, int line_number) {
  std::vector<long long> numbers;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    const std::string_view token = line.substr(i, j - i);
    long long value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() ||
        token.front() == '-' || token.front() == '+') {
      throw ParseError(line_number,
                       "expected a decimal integer, got '" +
                           std::string(token) + "'");
    }
    numbers.push_back(value);
    i = j;
  }
  return numbers;
}

}  // namespace

ElectionInstance ParseInstance(std::string_view text) {
  struct Line {
    int number;
    std::string_view content;
  };
  std::vector<Line> lines;
  int number = 0;
  while (!text.empty()) {
    const auto newline = text.find('\n');
    ++number;
    std::string_view raw = text.substr(0, newline);
    if (newline == std::string_view::npos) {
      text = {};
    } else {
      text.remove_prefix(newline + 1);
    }
    if (!raw.empty() && raw.front() == '#') continue;
    lines.push_back({number, TrimRight(raw)});
  }
  if (lines.empty()) throw ParseError(0, "missing header line");

  const auto header = ParseNumbers(lines[0].content, lines[0].number);
  if (header.size() != 3) {
    throw ParseError(lines[0].number, "header must be 'm n k'");
  }
  const long long m = header[0];
  const long long n = header[1];
  const long long k = header[2];
  if (m < 1 || n < 1 || k < 1) {
    throw ParseError(lines[0].number, "m, n and k must be positive");
  }
  if (m > 10'000'000 || n > 10'000'000) {
    throw ParseError(lines[0].number, "instance too large");
  }
  if (k > m) {
    throw ParseError(lines[0].number, "committee size k = " + std::to_string(k) +
                                          " exceeds m = " + std::to_string(m));
  }

  // Blank lines past the last ballot are tolerated.
  std::size_t available = lines.size();
  while (available > 1 + static_cast<std::size_t>(n) &&
         lines[available - 1].content.empty()) {
    --available;
  }
  if (available - 1 < static_cast<std::size_t>(n)) {
    throw ParseError(lines.back().number,
                     "expected " + std::to_string(n) + " ballot lines, found " +
                         std::to_string(available - 1));
  }
  if (available - 1 > static_cast<std::size_t>(n)) {
    throw ParseError(lines[n + 1].number, "more ballot lines than n = " +
                                              std::to_string(n));
  }

  std::vector<Ballot> ballots(n);
  for (long long v = 0; v < n; ++v) {
    const Line& line = lines[v + 1];
    for (long long c : ParseNumbers(line.content, line.number)) {
      if (c < 1 || c > m) {
        throw ParseError(line.number, "candidate " + std::to_string(c) +
                                          " outside 1.." + std::to_string(m));
      }
      if (!ballots[v].empty() && c - 1 <= ballots[v].back()) {
        throw ParseError(line.number, "candidates must be strictly increasing");
      }
      ballots[v].push_back(static_cast<Candidate>(c - 1));
    }
  }
  return ElectionInstance(static_cast<int>(m), static_cast<int>(k),
                          std::move(ballots));
}

std::string SerializeInstance(const ElectionInstance& instance) {
  std::string out = std::to_string(instance.num_candidates()) + " " +
                    std::to_string(instance.num_voters()) + " " +
                    std::to_string(instance.committee_size()) + "\n";
  for (const auto& ballot : instance.ballots()) {
    for (std::size_t i = 0; i < ballot.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(ballot[i] + 1);
    }
    out += '\n';
  }
  return out;
}

ElectionInstance ReadInstanceFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseInstance(buffer.str());
}

void WriteInstanceFile(const ElectionInstance& instance,
                       const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << SerializeInstance(instance);
}

std::string InstanceDigest(const ElectionInstance& instance) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char byte : SerializeInstance(instance)) {
    hash ^= byte;
    hash *= 0x100000001b3ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(hash));
  return buffer;
}

std::string IndexList(std::span<const int> indices) {
  std::string out;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(indices[i] + 1);
  }
  return out;
}

}  // namespace abclab
