// Copyright 2026 The committee-rules Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Core election data: candidates, strict preference orders, committees and
// the sorted position sequences committee scoring functions consume.

#ifndef COMMITTEE_ELECTION_HPP_
#define COMMITTEE_ELECTION_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace committee {

// 0-based candidate index into Election::labels().
using Candidate = std::uint32_t;

// A strict preference order, most-preferred first.
using Vote = std::vector<Candidate>;

// A set of candidates stored as a strictly increasing index sequence.
class Committee {
 public:
  Committee() = default;
  // Sorts `members`; throws PreconditionError on duplicates.
  explicit Committee(std::vector<Candidate> members);
  Committee(std::initializer_list<Candidate> members)
      : Committee(std::vector<Candidate>(members)) {}

  std::size_t size() const { return members_.size(); }
  std::span<const Candidate> members() const { return members_; }
  bool contains(Candidate c) const;

  auto operator<=>(const Committee&) const = default;
  bool operator==(const Committee&) const = default;

 private:
  std::vector<Candidate> members_;
};

// Sorted 1-based positions (i_1 < ... < i_k) that a committee occupies in
// one vote; an element of [m]_k.
class PositionSequence {
 public:
  PositionSequence() = default;
  // Throws PreconditionError unless strictly increasing and >= 1.
  explicit PositionSequence(std::vector<std::size_t> positions);
  PositionSequence(std::initializer_list<std::size_t> positions)
      : PositionSequence(std::vector<std::size_t>(positions)) {}

  std::size_t size() const { return positions_.size(); }
  std::size_t operator[](std::size_t t) const { return positions_[t]; }
  std::span<const std::size_t> positions() const { return positions_; }

  // Throws PreconditionError unless this is an element of [m]_k.
  void validate(std::size_t m, std::size_t k) const;

  auto operator<=>(const PositionSequence&) const = default;
  bool operator==(const PositionSequence&) const = default;

 private:
  std::vector<std::size_t> positions_;
};

// Immutable election: candidate labels plus one full strict ranking per
// voter. Every vote is validated to be a permutation of 0..m-1.
class Election {
 public:
  Election(std::vector<std::string> labels, std::vector<Vote> votes);

  std::size_t num_candidates() const { return labels_.size(); }
  std::size_t num_voters() const { return votes_.size(); }
  std::span<const std::string> labels() const { return labels_; }
  const std::string& label(Candidate c) const { return labels_.at(c); }
  std::span<const Vote> votes() const { return votes_; }
  const Vote& vote(std::size_t voter) const { return votes_.at(voter); }

  std::optional<Candidate> find(std::string_view label) const;

  // Throws PreconditionError if a member is >= m.
  void check_committee(const Committee& committee) const;

  // Renders "{a,b,c}" using candidate labels.
  std::string format(const Committee& committee) const;

  bool operator==(const Election&) const = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Vote> votes_;
};

// 1-based position of `candidate` in `vote`.
std::size_t position_of(std::span<const Candidate> vote, Candidate candidate);

// Sorted positions of the committee members in `vote`.
PositionSequence committee_positions(std::span<const Candidate> vote,
                                     const Committee& committee);

// Weak dominance I >= J: i_t <= j_t for every t. Throws PreconditionError on
// a length mismatch.
bool dominates(const PositionSequence& lhs, const PositionSequence& rhs);

// Default labels a, b, ..., z, c26, c27, ...
std::vector<std::string> default_labels(std::size_t m);

// Committee formed by the first k entries of `vote`.
Committee top_k_prefix(std::span<const Candidate> vote, std::size_t k);

}  // namespace committee

#endif  // COMMITTEE_ELECTION_HPP_
