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

// The fixed-majority criterion: if more than half of the voters rank the
// same k candidates in their top k positions, that committee must be the
// unique winner. Top-k-counting rules satisfy it exactly when g is not
// constant and
//
//   g(k) - g(k - k2) >= g(k1 + k2) - g(k1)   for all k1 + k2 <= k.
//
// This header checks the condition, tests it empirically against brute
// force, and builds elections on which a violating rule fails.

#ifndef COMMITTEE_AXIOMS_HPP_
#define COMMITTEE_AXIOMS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "committee/election.hpp"
#include "committee/rational.hpp"
#include "committee/scoring.hpp"
#include "committee/winners.hpp"

namespace committee {

struct FmViolation {
  std::size_t k1 = 0;
  std::size_t k2 = 0;
  Rational lhs;  // g(k) - g(k - k2)
  Rational rhs;  // g(k1 + k2) - g(k1)
};

struct FmCheckResult {
  bool satisfies = false;
  bool nonconstant = false;
  // First violating (k1, k2) in lexicographic order.
  std::optional<FmViolation> violation;
};

FmCheckResult fm_condition_check(const CountingFunction& g);

// The size-k set occupying the top k of strictly more than n/2 votes.
std::optional<Committee> is_fixed_majority_instance(const Election& election,
                                                    std::size_t k);

enum class FmVerdict { kPass, kFail, kNotApplicable };
std::string_view to_string(FmVerdict verdict);

struct EmpiricalFmResult {
  FmVerdict verdict = FmVerdict::kNotApplicable;
  std::optional<Committee> majority;
  // Brute-force winners; empty result when not applicable.
  std::optional<WinnerResult> winners;
};

// Pass iff the brute-force tie set is exactly {majority committee}.
EmpiricalFmResult empirical_fm_check(const ScoringEvaluator& evaluator,
                                     const Election& election,
                                     const WinnerOptions& options = {});

struct FmWitness {
  enum class Source { kCounting, kGeneral, kConstant };

  Election election;
  std::size_t k = 0;
  Committee majority_committee;
  Committee beating_committee;
  // The election has 2 * n_used + 1 voters.
  std::size_t n_used = 0;
  Source source = Source::kCounting;
  // (k1, k2) for kCounting; t for kGeneral.
  std::size_t k1 = 0;
  std::size_t k2 = 0;
  std::size_t t = 0;
};

// Builds the failing election for a counting function that violates the
// criterion, with the smallest n for which the beating committee strictly
// outscores the majority committee. Constant g yields a one-voter election
// in which every committee ties. Absent when g satisfies the criterion.
// Throws PreconditionError when m < 2k.
std::optional<FmWitness> witness_counting(const CountingFunction& g,
                                          std::size_t m);

struct GeneralWitnessResult {
  std::optional<FmWitness> witness;
  // f(I_t) and f(J_t) for t = 0..k.
  std::vector<Rational> f_upper;
  std::vector<Rational> f_lower;
  // When f(I_t) = f(J_t) for every t, f is top-k-counting with
  // g(t) = f(I_t) - f(I_0).
  std::optional<std::vector<Rational>> induced_g;
};

// Compares f on I_t = (1..t, k+1..2k-t) and J_t = (k-t+1..k, m-k+t+1..m).
// A strict gap yields the X/Y/Z/D election with minimal n. Requires a
// Tabulated evaluator with m >= 2k.
GeneralWitnessResult witness_general(const ScoringEvaluator& tabulated);

// Re-scores a witness by brute force: the majority committee is the
// fixed-majority committee, the beating committee scores at least as much,
// and the empirical check fails.
bool verify_witness(const FmWitness& witness,
                    const ScoringEvaluator& evaluator,
                    const WinnerOptions& options = {});

enum class FmClass { kConvexYes, kConcaveNonlinearNo, kDeferred };
std::string_view to_string(FmClass cls);

struct CorollaryResult {
  FmClass classification = FmClass::kDeferred;
  bool condition_satisfied = false;
  // The classification agrees with fm_condition_check.
  bool consistent = true;
};

CorollaryResult corollary_check(const CountingFunction& g);

// JSON sidecar naming M, S, the violating parameters and n_used.
std::string witness_to_json(const FmWitness& witness);

}  // namespace committee

#endif  // COMMITTEE_AXIOMS_HPP_
