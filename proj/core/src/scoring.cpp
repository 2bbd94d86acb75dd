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
#include "committee/scoring.hpp"

#include <algorithm>

#include "committee/combinatorics.hpp"
#include "committee/errors.hpp"

namespace committee {
namespace {

std::vector<std::uint32_t> zero_based(std::span<const std::size_t> positions) {
  std::vector<std::uint32_t> out(positions.size());
  for (std::size_t t = 0; t < positions.size(); ++t) {
    out[t] = static_cast<std::uint32_t>(positions[t] - 1);
  }
  return out;
}

// gamma == c * alpha_k for some c; returns c.
std::optional<Rational> approval_multiple(const SingleWinnerScoring& gamma,
                                          std::size_t k) {
  const auto values = gamma.values();
  if (k == 0 || k > values.size()) return std::nullopt;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const Rational& expected = i < k ? values[0] : Rational(0);
    if (values[i] != expected) return std::nullopt;
  }
  return values[0];
}

}  // namespace

SingleWinnerScoring::SingleWinnerScoring(std::vector<Rational> gamma)
    : gamma_(std::move(gamma)) {
  if (gamma_.empty()) throw PreconditionError("scoring function is empty");
  for (std::size_t i = 0; i < gamma_.size(); ++i) {
    if (gamma_[i] < 0) {
      throw PreconditionError("scoring function must be nonnegative");
    }
    if (i > 0 && gamma_[i] > gamma_[i - 1]) {
      throw PreconditionError("scoring function must be nonincreasing");
    }
  }
}

SingleWinnerScoring SingleWinnerScoring::approval(std::size_t t,
                                                  std::size_t m) {
  if (t > m) {
    throw PreconditionError("approval threshold t = " + std::to_string(t) +
                            " exceeds m = " + std::to_string(m));
  }
  std::vector<Rational> gamma(m, Rational(0));
  for (std::size_t i = 0; i < t; ++i) gamma[i] = 1;
  return SingleWinnerScoring(std::move(gamma));
}

SingleWinnerScoring SingleWinnerScoring::borda(std::size_t m) {
  std::vector<Rational> gamma(m);
  for (std::size_t i = 0; i < m; ++i) gamma[i] = Rational(m - 1 - i);
  return SingleWinnerScoring(std::move(gamma));
}

const Rational& SingleWinnerScoring::operator()(std::size_t position) const {
  if (position == 0 || position > gamma_.size()) {
    throw PreconditionError("position " + std::to_string(position) +
                            " out of range");
  }
  return gamma_[position - 1];
}

CountingFunction::CountingFunction(std::vector<Rational> values)
    : values_(std::move(values)) {
  if (values_.empty()) throw PreconditionError("counting function is empty");
  if (values_[0] != 0) throw PreconditionError("counting function needs g(0) = 0");
  for (std::size_t x = 1; x < values_.size(); ++x) {
    if (values_[x] < values_[x - 1]) {
      throw PreconditionError("counting function must be nondecreasing");
    }
  }
}

CountingFunction CountingFunction::parse(std::string_view text) {
  return CountingFunction(parse_rational_list(text));
}

CountingFunction CountingFunction::linear(std::size_t k) {
  std::vector<Rational> g(k + 1);
  for (std::size_t x = 0; x <= k; ++x) g[x] = Rational(x);
  return CountingFunction(std::move(g));
}

CountingFunction CountingFunction::step(std::size_t k) {
  std::vector<Rational> g(k + 1, Rational(0));
  g[k] = 1;
  return CountingFunction(std::move(g));
}

CountingFunction CountingFunction::indicator(std::size_t k) {
  std::vector<Rational> g(k + 1, Rational(1));
  g[0] = 0;
  return CountingFunction(std::move(g));
}

CountingFunction CountingFunction::nearly_linear(std::size_t k) {
  std::vector<Rational> g(k + 1, Rational(0));
  for (std::size_t x = 1; x <= k; ++x) g[x] = Rational(x - 1);
  return CountingFunction(std::move(g));
}

CountingFunction CountingFunction::harmonic(std::size_t k) {
  std::vector<Rational> g(k + 1, Rational(0));
  for (std::size_t x = 1; x <= k; ++x) g[x] = g[x - 1] + Rational(1, x);
  return CountingFunction(std::move(g));
}

Rational CountingFunction::differential(std::size_t x) const {
  if (x == 0 || x > k()) throw PreconditionError("differential index out of range");
  return values_[x] - values_[x - 1];
}

std::string CountingFunction::to_string() const {
  std::string out;
  for (std::size_t x = 0; x < values_.size(); ++x) {
    if (x) out += ',';
    out += format_rational(values_[x]);
  }
  return out;
}

OwaOperator::OwaOperator(std::vector<Rational> weights)
    : weights_(std::move(weights)) {
  for (const auto& w : weights_) {
    if (w < 0) throw PreconditionError("OWA weights must be nonnegative");
  }
}

ScoringEvaluator::ScoringEvaluator(std::string name, std::size_t m,
                                   std::size_t k, EvaluatorForm form)
    : name_(std::move(name)), m_(m), k_(k), form_(std::move(form)) {
  if (k_ == 0 || k_ > m_) {
    throw PreconditionError("committee size k = " + std::to_string(k_) +
                            " must satisfy 1 <= k <= m = " +
                            std::to_string(m_));
  }
  auto require_gamma = [&](const SingleWinnerScoring& gamma) {
    if (gamma.num_positions() != m_) {
      throw PreconditionError("scoring function covers " +
                              std::to_string(gamma.num_positions()) +
                              " positions, expected m = " +
                              std::to_string(m_));
    }
  };
  if (const auto* c = std::get_if<TopKCounting>(&form_)) {
    if (c->g.k() != k_) {
      throw PreconditionError("counting function is defined for k = " +
                              std::to_string(c->g.k()) + ", expected " +
                              std::to_string(k_));
    }
  } else if (const auto* s = std::get_if<WeaklySeparable>(&form_)) {
    require_gamma(s->gamma);
  } else if (const auto* r = std::get_if<RepresentationFocused>(&form_)) {
    require_gamma(r->gamma);
  } else if (const auto* o = std::get_if<OwaBased>(&form_)) {
    require_gamma(o->gamma);
    if (o->lambdas.size() != k_) {
      throw PreconditionError("OWA operator must have dimension k");
    }
  } else {
    const auto& table = std::get<Tabulated>(form_).table;
    if (m_ > kMaxTabulatedCandidates) {
      throw PreconditionError("tabulated evaluators support m <= " +
                              std::to_string(kMaxTabulatedCandidates));
    }
    if (table.size() != binomial(m_, k_)) {
      throw PreconditionError("tabulated evaluator needs C(m,k) entries");
    }
    // Single-step improvements: one position moved up by one.
    auto combo = first_combination(k_);
    do {
      const Rational& here = table[combination_rank(combo, m_)];
      if (here < 0) throw PreconditionError("tabulated scores must be nonnegative");
      for (std::size_t t = 0; t < k_; ++t) {
        const bool can_move =
            t == 0 ? combo[0] > 0 : combo[t] > combo[t - 1] + 1;
        if (!can_move) continue;
        auto better = combo;
        --better[t];
        if (table[combination_rank(better, m_)] < here) {
          throw PreconditionError(
              "tabulated evaluator is not monotone under dominance");
        }
      }
    } while (next_combination(combo, m_));
  }
}

ScoringEvaluator ScoringEvaluator::tabulate(
    std::string name, std::size_t m, std::size_t k,
    const std::function<Rational(const PositionSequence&)>& f) {
  if (m > kMaxTabulatedCandidates) {
    throw PreconditionError("tabulated evaluators support m <= " +
                            std::to_string(kMaxTabulatedCandidates));
  }
  if (k == 0 || k > m) throw PreconditionError("need 1 <= k <= m");
  std::vector<Rational> table;
  table.reserve(binomial(m, k));
  auto combo = first_combination(k);
  do {
    std::vector<std::size_t> positions(k);
    for (std::size_t t = 0; t < k; ++t) positions[t] = combo[t] + 1;
    table.push_back(f(PositionSequence(std::move(positions))));
  } while (next_combination(combo, m));
  return ScoringEvaluator(std::move(name), m, k, Tabulated{std::move(table)});
}

ScoringEvaluator ScoringEvaluator::tabulate(const ScoringEvaluator& source) {
  return tabulate(source.name(), source.m(), source.k(),
                  [&](const PositionSequence& p) { return source.eval(p); });
}

Rational ScoringEvaluator::eval(const PositionSequence& positions) const {
  positions.validate(m_, k_);
  return std::visit(
      [&](const auto& form) -> Rational {
        using T = std::decay_t<decltype(form)>;
        if constexpr (std::is_same_v<T, TopKCounting>) {
          std::size_t count = 0;
          for (std::size_t t = 0; t < k_; ++t) count += positions[t] <= k_;
          return form.g(count);
        } else if constexpr (std::is_same_v<T, WeaklySeparable>) {
          Rational sum = 0;
          for (std::size_t t = 0; t < k_; ++t) sum += form.gamma(positions[t]);
          return sum;
        } else if constexpr (std::is_same_v<T, RepresentationFocused>) {
          return form.gamma(positions[0]);
        } else if constexpr (std::is_same_v<T, OwaBased>) {
          Rational sum = 0;
          for (std::size_t t = 0; t < k_; ++t) {
            sum += form.lambdas[t] * form.gamma(positions[t]);
          }
          return sum;
        } else {
          return form.table[combination_rank(zero_based(positions.positions()),
                                             m_)];
        }
      },
      form_);
}

std::optional<CountingFunction> ScoringEvaluator::counting_function() const {
  if (const auto* c = std::get_if<TopKCounting>(&form_)) return c->g;
  if (const auto* o = std::get_if<OwaBased>(&form_)) {
    const auto scale = approval_multiple(o->gamma, k_);
    if (!scale) return std::nullopt;
    std::vector<Rational> g(k_ + 1, Rational(0));
    for (std::size_t x = 1; x <= k_; ++x) {
      g[x] = g[x - 1] + o->lambdas[x - 1] * *scale;
    }
    return CountingFunction(std::move(g));
  }
  if (const auto* s = std::get_if<WeaklySeparable>(&form_)) {
    const auto scale = approval_multiple(s->gamma, k_);
    if (!scale) return std::nullopt;
    std::vector<Rational> g(k_ + 1);
    for (std::size_t x = 0; x <= k_; ++x) g[x] = *scale * x;
    return CountingFunction(std::move(g));
  }
  if (const auto* r = std::get_if<RepresentationFocused>(&form_)) {
    const auto scale = approval_multiple(r->gamma, k_);
    if (!scale) return std::nullopt;
    std::vector<Rational> g(k_ + 1, *scale);
    g[0] = 0;
    return CountingFunction(std::move(g));
  }
  return std::nullopt;
}

std::optional<SingleWinnerScoring> ScoringEvaluator::separable_scores() const {
  if (const auto* s = std::get_if<WeaklySeparable>(&form_)) return s->gamma;
  if (const auto* c = std::get_if<TopKCounting>(&form_)) {
    if (!is_linear(c->g)) return std::nullopt;
    const Rational slope = c->g(1);
    std::vector<Rational> gamma(m_, Rational(0));
    for (std::size_t i = 0; i < k_; ++i) gamma[i] = slope;
    return SingleWinnerScoring(std::move(gamma));
  }
  if (const auto* o = std::get_if<OwaBased>(&form_)) {
    const auto weights = o->lambdas.weights();
    if (std::adjacent_find(weights.begin(), weights.end(),
                           std::not_equal_to<>()) != weights.end()) {
      return std::nullopt;
    }
    std::vector<Rational> gamma(m_);
    for (std::size_t i = 0; i < m_; ++i) gamma[i] = weights[0] * o->gamma(i + 1);
    return SingleWinnerScoring(std::move(gamma));
  }
  if (const auto* r = std::get_if<RepresentationFocused>(&form_)) {
    if (k_ == 1) return r->gamma;
  }
  return std::nullopt;
}

CompiledEvaluator::CompiledEvaluator(const ScoringEvaluator& evaluator)
    : m_(evaluator.m()), k_(evaluator.k()) {
  auto scale_gamma = [&](const SingleWinnerScoring& gamma, const BigInt& s) {
    gamma_.assign(m_ + 1, 0);
    for (std::size_t i = 1; i <= m_; ++i) gamma_[i] = scaled_int64(gamma(i), s);
  };
  const auto& form = evaluator.form();
  if (const auto* c = std::get_if<TopKCounting>(&form)) {
    kind_ = Kind::kCounting;
    const std::vector<Rational> values(c->g.values().begin(),
                                       c->g.values().end());
    denominator_ = common_denominator(values);
    for (const auto& v : values) counting_.push_back(scaled_int64(v, denominator_));
  } else if (const auto* s = std::get_if<WeaklySeparable>(&form)) {
    kind_ = Kind::kSeparable;
    denominator_ = common_denominator(
        {s->gamma.values().begin(), s->gamma.values().end()});
    scale_gamma(s->gamma, denominator_);
  } else if (const auto* r = std::get_if<RepresentationFocused>(&form)) {
    kind_ = Kind::kRepresentation;
    denominator_ = common_denominator(
        {r->gamma.values().begin(), r->gamma.values().end()});
    scale_gamma(r->gamma, denominator_);
  } else if (const auto* o = std::get_if<OwaBased>(&form)) {
    kind_ = Kind::kOwa;
    const BigInt lambda_scale = common_denominator(
        {o->lambdas.weights().begin(), o->lambdas.weights().end()});
    const BigInt gamma_scale = common_denominator(
        {o->gamma.values().begin(), o->gamma.values().end()});
    denominator_ = lambda_scale * gamma_scale;
    for (const auto& w : o->lambdas.weights()) {
      lambdas_.push_back(scaled_int64(w, lambda_scale));
    }
    scale_gamma(o->gamma, gamma_scale);
  } else {
    kind_ = Kind::kTable;
    const auto& table = std::get<Tabulated>(form).table;
    denominator_ = common_denominator(table);
    for (const auto& v : table) table_.push_back(scaled_int64(v, denominator_));
  }
}

std::int64_t CompiledEvaluator::score(
    std::span<const std::size_t> positions) const {
  switch (kind_) {
    case Kind::kCounting: {
      std::size_t count = 0;
      for (std::size_t p : positions) count += p <= k_;
      return counting_[count];
    }
    case Kind::kSeparable: {
      std::int64_t sum = 0;
      for (std::size_t p : positions) sum += gamma_[p];
      return sum;
    }
    case Kind::kRepresentation:
      return gamma_[positions[0]];
    case Kind::kOwa: {
      std::int64_t sum = 0;
      for (std::size_t t = 0; t < positions.size(); ++t) {
        sum += lambdas_[t] * gamma_[positions[t]];
      }
      return sum;
    }
    case Kind::kTable:
      return table_[combination_rank(zero_based(positions), m_)];
  }
  return 0;
}

Rational CompiledEvaluator::unscale(std::int64_t value) const {
  return Rational(BigInt(value), denominator_);
}

Rule parse_rule(std::string_view name) {
  if (name == "sntv") return Rule::kSntv;
  if (name == "bloc") return Rule::kBloc;
  if (name == "k-borda" || name == "borda") return Rule::kKBorda;
  if (name == "beta-cc" || name == "cc") return Rule::kBetaCc;
  if (name == "cc-alpha" || name == "alpha-cc") return Rule::kAlphaCc;
  if (name == "perfectionist") return Rule::kPerfectionist;
  if (name == "nearly-bloc") return Rule::kNearlyBloc;
  if (name == "pav" || name == "alpha-pav") return Rule::kAlphaPav;
  throw PreconditionError("unknown rule '" + std::string(name) + "'");
}

std::string_view rule_name(Rule rule) {
  switch (rule) {
    case Rule::kSntv: return "sntv";
    case Rule::kBloc: return "bloc";
    case Rule::kKBorda: return "k-borda";
    case Rule::kBetaCc: return "beta-cc";
    case Rule::kAlphaCc: return "cc-alpha";
    case Rule::kPerfectionist: return "perfectionist";
    case Rule::kNearlyBloc: return "nearly-bloc";
    case Rule::kAlphaPav: return "pav";
  }
  return "unknown";
}

ScoringEvaluator builtin(Rule rule, std::size_t m, std::size_t k,
                         std::optional<std::size_t> t) {
  std::string name(rule_name(rule));
  switch (rule) {
    case Rule::kSntv:
      return {name, m, k, WeaklySeparable{SingleWinnerScoring::approval(1, m)}};
    case Rule::kBloc:
      return {name, m, k, TopKCounting{CountingFunction::linear(k)}};
    case Rule::kKBorda:
      return {name, m, k, WeaklySeparable{SingleWinnerScoring::borda(m)}};
    case Rule::kBetaCc:
      return {name, m, k,
              RepresentationFocused{SingleWinnerScoring::borda(m)}};
    case Rule::kAlphaCc:
      return {name, m, k, TopKCounting{CountingFunction::indicator(k)}};
    case Rule::kPerfectionist:
      return {name, m, k, TopKCounting{CountingFunction::step(k)}};
    case Rule::kNearlyBloc:
      return {name, m, k, TopKCounting{CountingFunction::nearly_linear(k)}};
    case Rule::kAlphaPav: {
      if (!t) throw PreconditionError("pav needs the approval threshold t");
      std::vector<Rational> weights(k);
      for (std::size_t i = 0; i < k; ++i) weights[i] = Rational(1, i + 1);
      return {name + "-" + std::to_string(*t), m, k,
              OwaBased{OwaOperator(std::move(weights)),
                       SingleWinnerScoring::approval(*t, m)}};
    }
  }
  throw PreconditionError("unknown rule");
}

ScoringEvaluator counting_evaluator(const CountingFunction& g, std::size_t m,
                                    std::string name) {
  return ScoringEvaluator(std::move(name), m, g.k(), TopKCounting{g});
}

std::size_t top_k_count(std::span<const Candidate> vote,
                        const Committee& committee, std::size_t k) {
  if (committee.size() != k) {
    throw PreconditionError("committee size differs from k");
  }
  if (k > vote.size()) throw PreconditionError("k exceeds m");
  std::size_t count = 0;
  for (std::size_t i = 0; i < k; ++i) count += committee.contains(vote[i]);
  return count;
}

Rational committee_score(const ScoringEvaluator& evaluator,
                         const Election& election, const Committee& committee) {
  if (committee.size() != evaluator.k()) {
    throw PreconditionError("committee has size " +
                            std::to_string(committee.size()) +
                            ", evaluator expects k = " +
                            std::to_string(evaluator.k()));
  }
  if (election.num_candidates() != evaluator.m()) {
    throw PreconditionError("election has m = " +
                            std::to_string(election.num_candidates()) +
                            ", evaluator expects m = " +
                            std::to_string(evaluator.m()));
  }
  election.check_committee(committee);
  Rational total = 0;
  for (const Vote& vote : election.votes()) {
    total += evaluator.eval(committee_positions(vote, committee));
  }
  return total;
}

OwaOperator counting_to_owa(const CountingFunction& g) {
  std::vector<Rational> weights(g.k());
  for (std::size_t t = 1; t <= g.k(); ++t) weights[t - 1] = g.differential(t);
  return OwaOperator(std::move(weights));
}

std::string Singularity::to_string() const {
  return value ? std::to_string(*value) : "inf";
}

Singularity singularity(const CountingFunction& g) {
  if (g.k() < 2) throw PreconditionError("singularity needs k >= 2");
  for (std::size_t i = 2; i <= g.k(); ++i) {
    if (g.differential(i) != g.differential(i - 1)) return Singularity{i};
  }
  return Singularity{};
}

bool is_convex(const CountingFunction& g) {
  for (std::size_t i = 2; i <= g.k(); ++i) {
    if (g.differential(i) < g.differential(i - 1)) return false;
  }
  return true;
}

bool is_concave(const CountingFunction& g) {
  for (std::size_t i = 2; i <= g.k(); ++i) {
    if (g.differential(i) > g.differential(i - 1)) return false;
  }
  return true;
}

bool is_linear(const CountingFunction& g) {
  return is_convex(g) && is_concave(g);
}

}  // namespace committee
