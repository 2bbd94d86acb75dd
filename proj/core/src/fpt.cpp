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
#include "committee/fpt.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "committee/errors.hpp"

namespace committee {
namespace {

std::string lp_number(const Rational& value) {
  if (boost::multiprecision::denominator(value) == 1) {
    return format_rational(value);
  }
  return format_decimal(value, 12);
}

struct Search {
  const FptProgram& program;
  std::vector<std::int64_t> g;
  std::vector<std::vector<std::size_t>> members;  // voters of each group
  std::vector<std::size_t> suffix_capacity;
  std::vector<std::size_t> x;
  std::vector<std::size_t> z;
  std::int64_t value = 0;
  std::int64_t best = -1;
  std::vector<std::size_t> best_z;

  std::int64_t gain(std::size_t group) const {
    std::int64_t total = 0;
    for (auto v : members[group]) total += g[x[v] + 1] - g[x[v]];
    return total;
  }

  std::int64_t bound(std::size_t from, std::size_t seats) const {
    std::vector<std::pair<std::int64_t, std::size_t>> gains;
    for (std::size_t j = from; j < members.size(); ++j) {
      gains.emplace_back(gain(j), program.group_capacity(j));
    }
    std::sort(gains.begin(), gains.end(), std::greater<>());
    std::int64_t total = value;
    for (auto [each, capacity] : gains) {
      if (seats == 0) break;
      const std::size_t take = std::min(seats, capacity);
      total += each * static_cast<std::int64_t>(take);
      seats -= take;
    }
    return total;
  }

  void add(std::size_t group, std::size_t amount) {
    for (auto v : members[group]) {
      value -= g[x[v]];
      x[v] += amount;
      value += g[x[v]];
    }
  }

  void remove(std::size_t group, std::size_t amount) {
    for (auto v : members[group]) {
      value -= g[x[v]];
      x[v] -= amount;
      value += g[x[v]];
    }
  }

  void run(std::size_t group, std::size_t seats) {
    if (seats == 0) {
      if (value > best) {
        best = value;
        best_z = z;
      }
      return;
    }
    if (group == members.size() || suffix_capacity[group] < seats) return;
    if (bound(group, seats) <= best) return;
    const std::size_t most = std::min(seats, program.group_capacity(group));
    for (std::size_t take = most + 1; take-- > 0;) {
      z[group] = take;
      add(group, take);
      run(group + 1, seats - take);
      remove(group, take);
    }
    z[group] = 0;
  }
};

}  // namespace

VoterSubsetPartition::VoterSubsetPartition(std::size_t num_voters,
                                           std::size_t k,
                                           std::vector<VoterGroup> groups)
    : num_voters_(num_voters), k_(k), groups_(std::move(groups)) {
  if (num_voters_ == 0 || num_voters_ > 63) {
    throw PreconditionError("voter partitions support 1..63 voters");
  }
  std::sort(groups_.begin(), groups_.end(),
            [](const VoterGroup& a, const VoterGroup& b) {
              return a.voters < b.voters;
            });
  const VoterMask all = (VoterMask{1} << num_voters_) - 1;
  for (std::size_t i = 0; i < groups_.size(); ++i) {
    auto& group = groups_[i];
    if (group.voters == 0 || (group.voters & ~all) != 0) {
      throw PreconditionError("voter group mask out of range");
    }
    if (group.candidates.empty()) {
      throw PreconditionError("voter groups must be nonempty");
    }
    if (i > 0 && groups_[i - 1].voters == group.voters) {
      throw PreconditionError("duplicate voter group");
    }
    std::sort(group.candidates.begin(), group.candidates.end());
  }
}

std::span<const Candidate> VoterSubsetPartition::candidates_of(
    VoterMask voters) const {
  const auto it = std::lower_bound(
      groups_.begin(), groups_.end(), voters,
      [](const VoterGroup& g, VoterMask mask) { return g.voters < mask; });
  if (it == groups_.end() || it->voters != voters) return {};
  return it->candidates;
}

VoterSubsetPartition build_voter_partition(const Election& election,
                                           std::size_t k,
                                           std::size_t voter_cap) {
  const std::size_t n = election.num_voters();
  if (n > std::min<std::size_t>(voter_cap, 63)) {
    throw CapExceeded("n = " + std::to_string(n) +
                      " voters exceeds the voter cap of " +
                      std::to_string(std::min<std::size_t>(voter_cap, 63)));
  }
  if (k == 0 || k > election.num_candidates()) {
    throw PreconditionError("need 1 <= k <= m");
  }
  std::vector<VoterMask> mask(election.num_candidates(), 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < k; ++i) {
      mask[election.vote(v)[i]] |= VoterMask{1} << v;
    }
  }
  std::map<VoterMask, std::vector<Candidate>> buckets;
  for (Candidate c = 0; c < mask.size(); ++c) {
    if (mask[c] != 0) buckets[mask[c]].push_back(c);
  }
  std::vector<VoterGroup> groups;
  for (auto& [voters, candidates] : buckets) {
    groups.push_back({voters, std::move(candidates)});
  }
  return VoterSubsetPartition(n, k, std::move(groups));
}

FptProgram::FptProgram(CountingFunction g,
                       const VoterSubsetPartition& partition)
    : g_(std::move(g)), num_voters_(partition.num_voters()) {
  if (g_.k() != partition.k()) {
    throw PreconditionError("counting function and partition disagree on k");
  }
  for (const auto& group : partition.groups()) {
    group_voters_.push_back(group.voters);
    group_capacity_.push_back(group.candidates.size());
  }
  for (std::size_t j = 1; j <= g_.k(); ++j) {
    coefficients_.push_back(g_.differential(j));
  }
}

std::vector<std::size_t> FptProgram::voter_counts(
    std::span<const std::size_t> z) const {
  if (z.size() != num_groups()) throw PreconditionError("z has wrong length");
  std::vector<std::size_t> x(num_voters_, 0);
  for (std::size_t j = 0; j < z.size(); ++j) {
    for (std::size_t i = 0; i < num_voters_; ++i) {
      if (group_voters_[j] >> i & 1) x[i] += z[j];
    }
  }
  return x;
}

Rational FptProgram::objective(
    const std::vector<std::vector<Rational>>& x) const {
  Rational total = 0;
  for (const auto& row : x) {
    for (std::size_t j = 1; j <= row.size(); ++j) total += row[j - 1] * coefficient(j);
  }
  return total;
}

bool FptProgram::feasible(std::span<const std::size_t> z) const {
  if (z.size() != num_groups()) return false;
  std::size_t total = 0;
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (z[j] > group_capacity_[j]) return false;
    total += z[j];
  }
  return total == k();
}

std::string FptProgram::to_lp() const {
  std::ostringstream out;
  out << "\\ committee selection, n = " << num_voters_ << ", k = " << k()
      << "\nMaximize\n obj:";
  bool first = true;
  for (std::size_t i = 0; i < num_voters_; ++i) {
    for (std::size_t j = 1; j <= k(); ++j) {
      out << (first ? " " : " + ") << lp_number(coefficient(j)) << " x_" << i
          << "_" << j;
      first = false;
    }
  }
  out << "\nSubject To\n size:";
  for (std::size_t g = 0; g < num_groups(); ++g) {
    out << (g ? " + " : " ") << "z_" << g;
  }
  out << " = " << k() << '\n';
  for (std::size_t i = 0; i < num_voters_; ++i) {
    out << " count_" << i << ": x_" << i;
    for (std::size_t g = 0; g < num_groups(); ++g) {
      if (group_voters_[g] >> i & 1) out << " - z_" << g;
    }
    out << " = 0\n";
  }
  for (std::size_t i = 0; i < num_voters_; ++i) {
    out << " split_" << i << ":";
    for (std::size_t j = 1; j <= k(); ++j) {
      out << (j > 1 ? " + " : " ") << "x_" << i << "_" << j;
    }
    out << " - x_" << i << " = 0\n";
  }
  out << "Bounds\n";
  for (std::size_t g = 0; g < num_groups(); ++g) {
    out << " 0 <= z_" << g << " <= " << group_capacity_[g] << '\n';
  }
  for (std::size_t i = 0; i < num_voters_; ++i) {
    out << " 0 <= x_" << i << " <= " << k() << '\n';
    for (std::size_t j = 1; j <= k(); ++j) {
      out << " 0 <= x_" << i << "_" << j << " <= 1\n";
    }
  }
  out << "General\n";
  for (std::size_t g = 0; g < num_groups(); ++g) out << " z_" << g << '\n';
  for (std::size_t i = 0; i < num_voters_; ++i) out << " x_" << i << '\n';
  out << "End\n";
  return out.str();
}

std::vector<std::vector<Rational>> solve_relaxed_part(
    const FptProgram& program, std::span<const std::size_t> z) {
  const auto x = program.voter_counts(z);
  const std::size_t k = program.k();
  std::vector<std::size_t> order(k);
  for (std::size_t j = 0; j < k; ++j) order[j] = j + 1;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return program.coefficient(a) > program.coefficient(b);
  });
  std::vector<std::vector<Rational>> relaxed(
      program.num_voters(), std::vector<Rational>(k, Rational(0)));
  for (std::size_t i = 0; i < program.num_voters(); ++i) {
    for (std::size_t t = 0; t < std::min(x[i], k); ++t) {
      relaxed[i][order[t] - 1] = 1;
    }
  }
  return relaxed;
}

FptSolution BranchAndBoundBackend::solve(const FptProgram& program) const {
  if (!is_concave(program.g())) {
    throw PreconditionError("branch and bound requires a concave counting function");
  }
  Search search{program, {}, {}, {}, {}, {}, 0, -1, {}};
  BigInt denominator;
  {
    const std::vector<Rational> values(program.g().values().begin(),
                                       program.g().values().end());
    denominator = common_denominator(values);
    for (const auto& v : values) {
      search.g.push_back(scaled_int64(v, denominator));
    }
  }
  const std::size_t groups = program.num_groups();
  search.members.resize(groups);
  for (std::size_t j = 0; j < groups; ++j) {
    for (std::size_t i = 0; i < program.num_voters(); ++i) {
      if (program.group_voters(j) >> i & 1) search.members[j].push_back(i);
    }
  }
  search.suffix_capacity.assign(groups + 1, 0);
  for (std::size_t j = groups; j-- > 0;) {
    search.suffix_capacity[j] =
        search.suffix_capacity[j + 1] + program.group_capacity(j);
  }
  search.x.assign(program.num_voters(), 0);
  search.z.assign(groups, 0);
  search.run(0, program.k());
  if (search.best < 0) {
    throw PreconditionError("the program has no feasible committee");
  }

  FptSolution solution;
  solution.z = search.best_z;
  solution.x = program.voter_counts(solution.z);
  solution.x_relaxed = solve_relaxed_part(program, solution.z);
  solution.objective = program.objective(solution.x_relaxed);
  return solution;
}

FptOutcome fpt_voters_solve(const CountingFunction& g, const Election& election,
                            std::size_t voter_cap, const MilpBackend& backend) {
  if (!is_concave(g)) {
    throw PreconditionError("fpt-voters requires a concave counting function");
  }
  const auto partition = build_voter_partition(election, g.k(), voter_cap);
  FptProgram program(g, partition);
  FptSolution solution = backend.solve(program);
  if (!program.feasible(solution.z)) {
    throw Error("backend '" + backend.name() + "' returned an infeasible z");
  }
  std::vector<Candidate> members;
  for (std::size_t j = 0; j < program.num_groups(); ++j) {
    const auto& candidates = partition.groups()[j].candidates;
    members.insert(members.end(), candidates.begin(),
                   candidates.begin() + solution.z[j]);
  }
  WinnerResult result;
  result.algorithm = "fpt-voters";
  result.ties_complete = false;
  result.best_score = solution.objective;
  result.winners.emplace_back(std::move(members));
  return {std::move(result), std::move(program), std::move(solution)};
}

WinnerResult fpt_voters_winners(const CountingFunction& g,
                                const Election& election,
                                std::size_t voter_cap) {
  return fpt_voters_solve(g, election, voter_cap).result;
}

}  // namespace committee
