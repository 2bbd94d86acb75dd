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
#include "committee/election.hpp"

#include <algorithm>
#include <sstream>

#include "committee/errors.hpp"

namespace committee {

Committee::Committee(std::vector<Candidate> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw PreconditionError("committee lists a candidate twice");
  }
}

bool Committee::contains(Candidate c) const {
  return std::binary_search(members_.begin(), members_.end(), c);
}

PositionSequence::PositionSequence(std::vector<std::size_t> positions)
    : positions_(std::move(positions)) {
  for (std::size_t t = 0; t < positions_.size(); ++t) {
    if (positions_[t] == 0 || (t > 0 && positions_[t] <= positions_[t - 1])) {
      throw PreconditionError(
          "position sequence must be strictly increasing and 1-based");
    }
  }
}

void PositionSequence::validate(std::size_t m, std::size_t k) const {
  if (positions_.size() != k) {
    throw PreconditionError("position sequence has length " +
                            std::to_string(positions_.size()) + ", expected " +
                            std::to_string(k));
  }
  if (!positions_.empty() && positions_.back() > m) {
    throw PreconditionError("position " + std::to_string(positions_.back()) +
                            " exceeds m = " + std::to_string(m));
  }
}

Election::Election(std::vector<std::string> labels, std::vector<Vote> votes)
    : labels_(std::move(labels)), votes_(std::move(votes)) {
  const std::size_t m = labels_.size();
  if (m == 0) throw PreconditionError("election needs at least one candidate");
  if (votes_.empty()) throw PreconditionError("election needs at least one vote");
  std::vector<std::uint32_t> seen(m, 0);
  for (std::size_t v = 0; v < votes_.size(); ++v) {
    const Vote& vote = votes_[v];
    if (vote.size() != m) {
      throw PreconditionError("vote " + std::to_string(v + 1) + " ranks " +
                              std::to_string(vote.size()) +
                              " candidates, expected " + std::to_string(m));
    }
    const auto stamp = static_cast<std::uint32_t>(v + 1);
    for (Candidate c : vote) {
      if (c >= m || seen[c] == stamp) {
        throw PreconditionError("vote " + std::to_string(v + 1) +
                                " is not a permutation of the candidates");
      }
      seen[c] = stamp;
    }
  }
}

std::optional<Candidate> Election::find(std::string_view label) const {
  for (std::size_t c = 0; c < labels_.size(); ++c) {
    if (labels_[c] == label) return static_cast<Candidate>(c);
  }
  return std::nullopt;
}

void Election::check_committee(const Committee& committee) const {
  for (Candidate c : committee.members()) {
    if (c >= num_candidates()) {
      throw PreconditionError("committee member " + std::to_string(c) +
                              " out of range");
    }
  }
}

std::string Election::format(const Committee& committee) const {
  std::string out = "{";
  bool first = true;
  for (Candidate c : committee.members()) {
    if (!first) out += ',';
    out += label(c);
    first = false;
  }
  return out + "}";
}

std::size_t position_of(std::span<const Candidate> vote, Candidate candidate) {
  if (candidate >= vote.size()) {
    throw PreconditionError("candidate " + std::to_string(candidate) +
                            " out of range");
  }
  const auto it = std::find(vote.begin(), vote.end(), candidate);
  return static_cast<std::size_t>(it - vote.begin()) + 1;
}

PositionSequence committee_positions(std::span<const Candidate> vote,
                                     const Committee& committee) {
  std::vector<std::size_t> positions;
  positions.reserve(committee.size());
  for (std::size_t i = 0; i < vote.size(); ++i) {
    if (committee.contains(vote[i])) positions.push_back(i + 1);
  }
  if (positions.size() != committee.size()) {
    throw PreconditionError("committee member out of range");
  }
  return PositionSequence(std::move(positions));
}

bool dominates(const PositionSequence& lhs, const PositionSequence& rhs) {
  if (lhs.size() != rhs.size()) {
    throw PreconditionError("dominance needs sequences of equal length");
  }
  for (std::size_t t = 0; t < lhs.size(); ++t) {
    if (lhs[t] > rhs[t]) return false;
  }
  return true;
}

std::vector<std::string> default_labels(std::size_t m) {
  std::vector<std::string> labels;
  labels.reserve(m);
  for (std::size_t c = 0; c < m; ++c) {
    if (c < 26) {
      labels.emplace_back(1, static_cast<char>('a' + c));
    } else {
      labels.push_back("c" + std::to_string(c));
    }
  }
  return labels;
}

Committee top_k_prefix(std::span<const Candidate> vote, std::size_t k) {
  if (k > vote.size()) throw PreconditionError("k exceeds the vote length");
  return Committee(std::vector<Candidate>(vote.begin(), vote.begin() + k));
}

}  // namespace committee
