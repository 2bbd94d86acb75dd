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

// Winner determination for committee scoring rules.

#ifndef COMMITTEE_WINNERS_HPP_
#define COMMITTEE_WINNERS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "committee/election.hpp"
#include "committee/rational.hpp"
#include "committee/scoring.hpp"

namespace committee {

struct WinnerOptions {
  // Largest C(m,k) brute force will enumerate.
  std::uint64_t enumeration_cap = 5'000'000;
  // Largest tie set reported in full.
  std::size_t tie_cap = 10'000;
  // Worker threads for brute-force enumeration. Results do not depend on it.
  unsigned threads = 1;
};

struct WinnerResult {
  // Sorted lexicographically. Never empty.
  std::vector<Committee> winners;
  Rational best_score;
  std::string algorithm;
  // False for approximation algorithms.
  bool exact = true;
  // The tie set exceeded tie_cap; `winners` then holds only the
  // lexicographically least optimal committee.
  bool truncated = false;
  // `winners` lists every optimal committee. Algorithms that reconstruct a
  // single optimum report false.
  bool ties_complete = true;
};

// Scores every size-k committee in lexicographic order. Throws CapExceeded
// when C(m,k) exceeds options.enumeration_cap.
WinnerResult brute_force_winners(const ScoringEvaluator& evaluator,
                                 const Election& election,
                                 const WinnerOptions& options = {});

// Weakly separable rules: rank candidates by total gamma score and take
// every committee made of all candidates above the k-th score plus a subset
// of the boundary-tied ones.
WinnerResult separable_winners(const SingleWinnerScoring& gamma,
                               const Election& election, std::size_t k,
                               const WinnerOptions& options = {});

// Perfectionist: only the voters' top-k prefixes can score.
WinnerResult perfectionist_winners(const Election& election, std::size_t k,
                                   const WinnerOptions& options = {});

// Counting functions with k - sing(g) <= q. Enumerates committees holding
// at least sing(g) of some voter's top k and compares against the Bloc
// winners under the linear part of g. Falls back to brute force when
// q >= k/2, or when the Bloc candidate cannot certify optimality (possible
// only for g below its linear part). Throws PreconditionError when
// k - sing(g) > q.
WinnerResult near_perfectionist_winners(const CountingFunction& g,
                                        const Election& election,
                                        std::size_t q,
                                        const WinnerOptions& options = {});

// Greedy maximization of sum_v g(top_k_count(v, W)) for concave g; ties go
// to the lowest candidate index. exact = false. Throws PreconditionError
// unless g is concave.
WinnerResult greedy_concave(const CountingFunction& g,
                            const Election& election);

// Exact optimum for any top-k-counting rule. Enumerates subsets of the
// candidates that appear in at least two voters' top k and distributes the
// remaining seats over voter-private candidates by dynamic programming.
// Returns one optimal committee (ties_complete = false). Throws CapExceeded
// when the shared-candidate enumeration exceeds options.enumeration_cap.
WinnerResult exact_counting_optimum(const CountingFunction& g,
                                    const Election& election,
                                    const WinnerOptions& options = {});

// True iff some size-k committee scores >= threshold. Uses brute force when
// within the cap, otherwise the exact counting search when the evaluator is
// top-k-counting.
bool exists_committee_with_score(const ScoringEvaluator& evaluator,
                                 const Election& election,
                                 const Rational& threshold,
                                 const WinnerOptions& options = {});

// sum_v g(top_k_count(v, W)) for |W| = g.k().
Rational counting_score(const CountingFunction& g, const Election& election,
                        const Committee& committee);

}  // namespace committee

#endif  // COMMITTEE_WINNERS_HPP_
