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

// Committee scoring functions f_{m,k}: [m]_k -> Q>=0, the counting functions
// of top-k-counting rules, OWA operators and the built-in rules.

#ifndef COMMITTEE_SCORING_HPP_
#define COMMITTEE_SCORING_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "committee/election.hpp"
#include "committee/rational.hpp"

namespace committee {

// gamma(1) >= ... >= gamma(m) >= 0, addressed by 1-based position.
class SingleWinnerScoring {
 public:
  explicit SingleWinnerScoring(std::vector<Rational> gamma);

  static SingleWinnerScoring approval(std::size_t t, std::size_t m);
  static SingleWinnerScoring borda(std::size_t m);

  std::size_t num_positions() const { return gamma_.size(); }
  const Rational& operator()(std::size_t position) const;
  std::span<const Rational> values() const { return gamma_; }

  bool operator==(const SingleWinnerScoring&) const = default;

 private:
  std::vector<Rational> gamma_;
};

// g(0..k) with g(0) = 0, nonnegative and nondecreasing.
class CountingFunction {
 public:
  explicit CountingFunction(std::vector<Rational> values);

  // Parses "0,1,1,2" (rationals as p/q).
  static CountingFunction parse(std::string_view text);

  static CountingFunction linear(std::size_t k);         // Bloc
  static CountingFunction step(std::size_t k);           // Perfectionist
  static CountingFunction indicator(std::size_t k);      // alpha_k-CC
  static CountingFunction nearly_linear(std::size_t k);  // NearlyBloc
  static CountingFunction harmonic(std::size_t k);       // alpha_k-PAV

  std::size_t k() const { return values_.size() - 1; }
  const Rational& operator()(std::size_t x) const { return values_.at(x); }
  std::span<const Rational> values() const { return values_; }
  // g(x) - g(x-1) for x in 1..k.
  Rational differential(std::size_t x) const;

  std::string to_string() const;

  bool operator==(const CountingFunction&) const = default;

 private:
  std::vector<Rational> values_;
};

class OwaOperator {
 public:
  explicit OwaOperator(std::vector<Rational> weights);
  std::size_t size() const { return weights_.size(); }
  const Rational& operator[](std::size_t t) const { return weights_.at(t); }
  std::span<const Rational> weights() const { return weights_; }
  bool operator==(const OwaOperator&) const = default;

 private:
  std::vector<Rational> weights_;
};

struct TopKCounting {
  CountingFunction g;
};
struct WeaklySeparable {
  SingleWinnerScoring gamma;
};
struct RepresentationFocused {
  SingleWinnerScoring gamma;
};
struct OwaBased {
  OwaOperator lambdas;
  SingleWinnerScoring gamma;
};
// Explicit f over all of [m]_k, indexed by lexicographic rank of
// (i_1 - 1, ..., i_k - 1) among k-subsets of {0..m-1}.
struct Tabulated {
  std::vector<Rational> table;
};

using EvaluatorForm = std::variant<TopKCounting, WeaklySeparable,
                                   RepresentationFocused, OwaBased, Tabulated>;

// Largest m accepted for Tabulated evaluators (exhaustive validation).
inline constexpr std::size_t kMaxTabulatedCandidates = 10;

// A committee scoring function f_{m,k}. Immutable.
class ScoringEvaluator {
 public:
  // Throws PreconditionError when the form does not fit (m, k), or when a
  // Tabulated form violates dominance monotonicity.
  ScoringEvaluator(std::string name, std::size_t m, std::size_t k,
                   EvaluatorForm form);

  // Tabulates an arbitrary function over [m]_k (m <= 10).
  static ScoringEvaluator tabulate(
      std::string name, std::size_t m, std::size_t k,
      const std::function<Rational(const PositionSequence&)>& f);
  // Tabulated copy of another evaluator.
  static ScoringEvaluator tabulate(const ScoringEvaluator& source);

  const std::string& name() const { return name_; }
  std::size_t m() const { return m_; }
  std::size_t k() const { return k_; }
  const EvaluatorForm& form() const { return form_; }

  // f(I); throws PreconditionError unless I is in [m]_k.
  Rational eval(const PositionSequence& positions) const;

  // The counting function when this evaluator is top-k-counting by
  // construction (TopKCounting, OWA over alpha_k, weakly separable over a
  // multiple of alpha_k). Tabulated forms are not inspected.
  std::optional<CountingFunction> counting_function() const;

  // The per-candidate scoring function when weakly separable by
  // construction.
  std::optional<SingleWinnerScoring> separable_scores() const;

 private:
  std::string name_;
  std::size_t m_;
  std::size_t k_;
  EvaluatorForm form_;
};

// Integer-scaled form of an evaluator used by the enumeration paths: every
// value is multiplied by a common denominator so per-voter scores are exact
// int64 sums.
class CompiledEvaluator {
 public:
  explicit CompiledEvaluator(const ScoringEvaluator& evaluator);

  std::size_t m() const { return m_; }
  std::size_t k() const { return k_; }
  const BigInt& denominator() const { return denominator_; }

  // Scaled f for sorted 1-based positions (already validated by caller).
  std::int64_t score(std::span<const std::size_t> positions) const;

  // Scaled g when the evaluator is top-k-counting; empty otherwise.
  std::span<const std::int64_t> counting_table() const { return counting_; }

  Rational unscale(std::int64_t value) const;

 private:
  enum class Kind { kCounting, kSeparable, kRepresentation, kOwa, kTable };
  Kind kind_;
  std::size_t m_;
  std::size_t k_;
  BigInt denominator_;
  std::vector<std::int64_t> counting_;
  std::vector<std::int64_t> gamma_;
  std::vector<std::int64_t> lambdas_;
  std::vector<std::int64_t> table_;
};

enum class Rule {
  kSntv,
  kBloc,
  kKBorda,
  kBetaCc,
  kAlphaCc,
  kPerfectionist,
  kNearlyBloc,
  kAlphaPav,
};

// Accepts the CLI spellings: sntv, bloc, k-borda, beta-cc, cc-alpha
// (alias alpha-cc), perfectionist, nearly-bloc, pav. Throws
// PreconditionError for an unknown name.
Rule parse_rule(std::string_view name);
std::string_view rule_name(Rule rule);

// `t` is required for kAlphaPav (t <= m) and ignored otherwise.
ScoringEvaluator builtin(Rule rule, std::size_t m, std::size_t k,
                         std::optional<std::size_t> t = std::nullopt);

ScoringEvaluator counting_evaluator(const CountingFunction& g, std::size_t m,
                                    std::string name = "counting");

// Number of committee members the vote ranks in positions 1..k.
std::size_t top_k_count(std::span<const Candidate> vote,
                        const Committee& committee, std::size_t k);

// Sum over voters of f(pos_v(S)). Throws PreconditionError on a size or m
// mismatch.
Rational committee_score(const ScoringEvaluator& evaluator,
                         const Election& election, const Committee& committee);

// Lambda = (g(1)-g(0), ..., g(k)-g(k-1)).
OwaOperator counting_to_owa(const CountingFunction& g);

// sing(g): the smallest i in 2..k with g(i)-g(i-1) != g(i-1)-g(i-2); empty
// (infinite) when the differential is constant.
struct Singularity {
  std::optional<std::size_t> value;

  bool infinite() const { return !value.has_value(); }
  std::string to_string() const;
  bool operator==(const Singularity&) const = default;
};

// Throws PreconditionError when k < 2.
Singularity singularity(const CountingFunction& g);

bool is_convex(const CountingFunction& g);
bool is_concave(const CountingFunction& g);
bool is_linear(const CountingFunction& g);

}  // namespace committee

#endif  // COMMITTEE_SCORING_HPP_
