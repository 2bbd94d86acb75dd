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

// Winner determination parameterized by the number of voters, for concave
// top-k-counting rules.
//
// Candidates are grouped by the exact set of voters that rank them in the
// top k. A committee is then described, up to score, by how many members it
// takes from each group (z). The mixed program
//
//   maximize   sum_i sum_j x_{i,j} (g(j) - g(j-1))
//   subject to sum_g z_g = k
//              x_i = sum_{g containing voter i} z_g
//              sum_j x_{i,j} = x_i,   0 <= x_{i,j} <= 1
//              0 <= z_g <= |group g|,  z integral
//
// is exposed as FptProgram; the bundled backend solves it by depth-first
// branch and bound over z.

#ifndef COMMITTEE_FPT_HPP_
#define COMMITTEE_FPT_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "committee/election.hpp"
#include "committee/rational.hpp"
#include "committee/scoring.hpp"
#include "committee/winners.hpp"

namespace committee {

inline constexpr std::size_t kDefaultVoterCap = 16;

// Bit i of a mask stands for voter i.
using VoterMask = std::uint64_t;

struct VoterGroup {
  VoterMask voters = 0;
  // Ascending candidate indices ranked in the top k by exactly `voters`.
  std::vector<Candidate> candidates;
};

class VoterSubsetPartition {
 public:
  VoterSubsetPartition(std::size_t num_voters, std::size_t k,
                       std::vector<VoterGroup> groups);

  std::size_t num_voters() const { return num_voters_; }
  std::size_t k() const { return k_; }
  // Nonempty groups ordered by mask.
  std::span<const VoterGroup> groups() const { return groups_; }
  // Candidates of T(voters); empty when the group is empty.
  std::span<const Candidate> candidates_of(VoterMask voters) const;

 private:
  std::size_t num_voters_;
  std::size_t k_;
  std::vector<VoterGroup> groups_;
};

// Throws CapExceeded when n > voter_cap (voter_cap <= 63).
VoterSubsetPartition build_voter_partition(const Election& election,
                                           std::size_t k,
                                           std::size_t voter_cap =
                                               kDefaultVoterCap);

class FptProgram {
 public:
  FptProgram(CountingFunction g, const VoterSubsetPartition& partition);

  const CountingFunction& g() const { return g_; }
  std::size_t num_voters() const { return num_voters_; }
  std::size_t k() const { return g_.k(); }
  std::size_t num_groups() const { return group_voters_.size(); }
  VoterMask group_voters(std::size_t group) const {
    return group_voters_[group];
  }
  std::size_t group_capacity(std::size_t group) const {
    return group_capacity_[group];
  }
  // Objective coefficient of x_{i,j}: g(j) - g(j-1), j in 1..k.
  const Rational& coefficient(std::size_t j) const {
    return coefficients_.at(j - 1);
  }

  // x_i = sum of z_g over groups containing voter i.
  std::vector<std::size_t> voter_counts(std::span<const std::size_t> z) const;

  // Figure objective for explicit relaxed values x[i][j-1].
  Rational objective(const std::vector<std::vector<Rational>>& x) const;

  // True iff z satisfies the size and bound constraints.
  bool feasible(std::span<const std::size_t> z) const;

  // CPLEX LP text: objective, equality constraints, bounds and a General
  // section marking z integral.
  std::string to_lp() const;

 private:
  CountingFunction g_;
  std::size_t num_voters_;
  std::vector<VoterMask> group_voters_;
  std::vector<std::size_t> group_capacity_;
  std::vector<Rational> coefficients_;
};

struct FptSolution {
  std::vector<std::size_t> z;
  std::vector<std::size_t> x;
  // x_relaxed[i][j-1]: solution of the continuous part for the fixed z.
  std::vector<std::vector<Rational>> x_relaxed;
  Rational objective;
};

// Pluggable solver for FptProgram.
class MilpBackend {
 public:
  virtual ~MilpBackend() = default;
  virtual std::string name() const = 0;
  virtual FptSolution solve(const FptProgram& program) const = 0;
};

// Depth-first branch and bound over z. For integral z and concave g the
// continuous part is optimal at x_{i,j} = [j <= x_i], so the objective is
// sum_i g(x_i). Nodes are pruned with the bound "current value + best
// remaining seats at current marginal gains", admissible because the
// objective is submodular in the committee.
class BranchAndBoundBackend : public MilpBackend {
 public:
  std::string name() const override { return "branch-and-bound"; }
  FptSolution solve(const FptProgram& program) const override;
};

// Solves the continuous part for fixed integral z: for each voter, fills
// x_{i,j} in order of decreasing coefficient (ties by lower j) up to x_i.
std::vector<std::vector<Rational>> solve_relaxed_part(
    const FptProgram& program, std::span<const std::size_t> z);

struct FptOutcome {
  WinnerResult result;
  FptProgram program;
  FptSolution solution;
};

// Throws PreconditionError unless g is concave, CapExceeded when n exceeds
// voter_cap.
FptOutcome fpt_voters_solve(const CountingFunction& g,
                            const Election& election,
                            std::size_t voter_cap = kDefaultVoterCap,
                            const MilpBackend& backend =
                                BranchAndBoundBackend());

WinnerResult fpt_voters_winners(const CountingFunction& g,
                                const Election& election,
                                std::size_t voter_cap = kDefaultVoterCap);

}  // namespace committee

#endif  // COMMITTEE_FPT_HPP_
