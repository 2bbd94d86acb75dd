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
#include "committee/axioms.hpp"

#include <map>

#include "json.hpp"

#include "committee/errors.hpp"

namespace committee {
namespace {

// Smallest n >= 1 with gap + n * (-slope) < 0, i.e. n > gap / slope.
std::size_t minimal_n(const Rational& gap, const Rational& slope) {
  return static_cast<std::size_t>(to_int64(floor_of(gap / slope))) + 1;
}

std::vector<Candidate> range(Candidate first, Candidate last) {
  std::vector<Candidate> out;
  for (Candidate c = first; c < last; ++c) out.push_back(c);
  return out;
}

nlohmann::json committee_json(const Election& election,
                              const Committee& committee) {
  nlohmann::json out = nlohmann::json::array();
  for (Candidate c : committee.members()) out.push_back(election.label(c));
  return out;
}

}  // namespace

FmCheckResult fm_condition_check(const CountingFunction& g) {
  const std::size_t k = g.k();
  FmCheckResult result;
  result.nonconstant = g(k) != 0;
  for (std::size_t k1 = 0; k1 <= k && !result.violation; ++k1) {
    for (std::size_t k2 = 0; k1 + k2 <= k; ++k2) {
      const Rational lhs = g(k) - g(k - k2);
      const Rational rhs = g(k1 + k2) - g(k1);
      if (lhs < rhs) {
        result.violation = FmViolation{k1, k2, lhs, rhs};
        break;
      }
    }
  }
  result.satisfies = result.nonconstant && !result.violation;
  return result;
}

std::optional<Committee> is_fixed_majority_instance(const Election& election,
                                                    std::size_t k) {
  if (k == 0 || k > election.num_candidates()) {
    throw PreconditionError("need 1 <= k <= m");
  }
  std::map<Committee, std::size_t> tally;
  for (const Vote& vote : election.votes()) ++tally[top_k_prefix(vote, k)];
  for (const auto& [committee, count] : tally) {
    if (2 * count > election.num_voters()) return committee;
  }
  return std::nullopt;
}

std::string_view to_string(FmVerdict verdict) {
  switch (verdict) {
    case FmVerdict::kPass: return "pass";
    case FmVerdict::kFail: return "fail";
    case FmVerdict::kNotApplicable: return "not-applicable";
  }
  return "unknown";
}

EmpiricalFmResult empirical_fm_check(const ScoringEvaluator& evaluator,
                                     const Election& election,
                                     const WinnerOptions& options) {
  EmpiricalFmResult result;
  result.majority = is_fixed_majority_instance(election, evaluator.k());
  if (!result.majority) return result;
  result.winners = brute_force_winners(evaluator, election, options);
  const auto& w = *result.winners;
  const bool unique = !w.truncated && w.winners.size() == 1 &&
                      w.winners.front() == *result.majority;
  result.verdict = unique ? FmVerdict::kPass : FmVerdict::kFail;
  return result;
}

std::optional<FmWitness> witness_counting(const CountingFunction& g,
                                          std::size_t m) {
  const std::size_t k = g.k();
  if (k == 0 || m < 2 * k) {
    throw PreconditionError("witness construction needs k >= 1 and m >= 2k");
  }
  const auto check = fm_condition_check(g);
  if (check.satisfies) return std::nullopt;

  FmWitness witness{Election({"a"}, {{0}}), 0, {}, {}};
  witness.k = k;
  if (!check.violation) {
    witness.source = FmWitness::Source::kConstant;
    witness.n_used = 0;
    std::vector<Vote> votes{range(0, static_cast<Candidate>(m))};
    witness.election = Election(default_labels(m), std::move(votes));
    witness.majority_committee = Committee(range(0, static_cast<Candidate>(k)));
    witness.beating_committee =
        Committee(range(1, static_cast<Candidate>(k + 1)));
    return witness;
  }

  const auto& v = *check.violation;
  const std::size_t k1 = v.k1;
  const std::size_t k2 = v.k2;
  const std::size_t n = minimal_n(g(k) - g(k1 + k2), v.rhs - v.lhs);

  const Vote straight = range(0, static_cast<Candidate>(m));
  Vote bent = range(0, static_cast<Candidate>(k1));
  for (std::size_t c = m; c > k1; --c) bent.push_back(static_cast<Candidate>(c - 1));
  std::vector<Vote> votes(n + 1, straight);
  votes.insert(votes.end(), n, bent);

  std::vector<Candidate> beating = range(0, static_cast<Candidate>(k1 + k2));
  for (std::size_t i = 0; i < k - k1 - k2; ++i) {
    beating.push_back(static_cast<Candidate>(m - 1 - i));
  }
  witness.election = Election(default_labels(m), std::move(votes));
  witness.majority_committee = Committee(range(0, static_cast<Candidate>(k)));
  witness.beating_committee = Committee(std::move(beating));
  witness.n_used = n;
  witness.source = FmWitness::Source::kCounting;
  witness.k1 = k1;
  witness.k2 = k2;
  return witness;
}

GeneralWitnessResult witness_general(const ScoringEvaluator& tabulated) {
  if (!std::holds_alternative<Tabulated>(tabulated.form())) {
    throw PreconditionError("witness_general needs a tabulated evaluator");
  }
  const std::size_t m = tabulated.m();
  const std::size_t k = tabulated.k();
  if (m < 2 * k) throw PreconditionError("witness construction needs m >= 2k");

  GeneralWitnessResult result;
  for (std::size_t t = 0; t <= k; ++t) {
    std::vector<std::size_t> upper;
    std::vector<std::size_t> lower;
    for (std::size_t i = 1; i <= t; ++i) upper.push_back(i);
    for (std::size_t i = k + 1; i <= 2 * k - t; ++i) upper.push_back(i);
    for (std::size_t i = k - t + 1; i <= k; ++i) lower.push_back(i);
    for (std::size_t i = m - (k - t) + 1; i <= m; ++i) lower.push_back(i);
    result.f_upper.push_back(tabulated.eval(PositionSequence(upper)));
    result.f_lower.push_back(tabulated.eval(PositionSequence(lower)));
  }

  std::optional<std::size_t> gap_at;
  for (std::size_t t = 0; t <= k && !gap_at; ++t) {
    if (result.f_upper[t] > result.f_lower[t]) gap_at = t;
  }
  if (!gap_at) {
    std::vector<Rational> g;
    for (std::size_t t = 0; t <= k; ++t) g.push_back(result.f_upper[t] - result.f_upper[0]);
    result.induced_g = std::move(g);
    return result;
  }

  const std::size_t t = *gap_at;
  const Rational top = result.f_upper[k];
  const std::size_t n = minimal_n(top - result.f_upper[t],
                                  result.f_upper[t] - result.f_lower[t]);
  // X = 0..t-1, Y = t..k-1, Z = k..2k-t-1, D = the rest.
  const auto x_end = static_cast<Candidate>(t);
  const auto y_end = static_cast<Candidate>(k);
  const auto z_end = static_cast<Candidate>(2 * k - t);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < t; ++i) labels.push_back("x" + std::to_string(i + 1));
  for (std::size_t i = t; i < k; ++i) labels.push_back("y" + std::to_string(i + 1));
  for (std::size_t i = t; i < k; ++i) labels.push_back("z" + std::to_string(i + 1));
  for (std::size_t i = 0; labels.size() < m; ++i) labels.push_back("d" + std::to_string(i + 1));

  const Vote first = range(0, static_cast<Candidate>(m));
  Vote second = range(y_end, z_end);
  for (Candidate c : range(0, x_end)) second.push_back(c);
  for (Candidate c : range(z_end, static_cast<Candidate>(m))) second.push_back(c);
  for (Candidate c : range(x_end, y_end)) second.push_back(c);
  std::vector<Vote> votes(n + 1, first);
  votes.insert(votes.end(), n, second);

  std::vector<Candidate> beating = range(0, x_end);
  for (Candidate c : range(y_end, z_end)) beating.push_back(c);

  FmWitness witness{Election(std::move(labels), std::move(votes)), 0, {}, {}};
  witness.k = k;
  witness.majority_committee = Committee(range(0, y_end));
  witness.beating_committee = Committee(std::move(beating));
  witness.n_used = n;
  witness.source = FmWitness::Source::kGeneral;
  witness.t = t;
  result.witness = std::move(witness);
  return result;
}

bool verify_witness(const FmWitness& witness, const ScoringEvaluator& evaluator,
                    const WinnerOptions& options) {
  if (evaluator.k() != witness.k ||
      evaluator.m() != witness.election.num_candidates()) {
    throw PreconditionError("evaluator does not match the witness election");
  }
  const auto majority = is_fixed_majority_instance(witness.election, witness.k);
  if (!majority || *majority != witness.majority_committee) return false;
  if (committee_score(evaluator, witness.election, witness.beating_committee) <
      committee_score(evaluator, witness.election, witness.majority_committee)) {
    return false;
  }
  return empirical_fm_check(evaluator, witness.election, options).verdict ==
         FmVerdict::kFail;
}

std::string_view to_string(FmClass cls) {
  switch (cls) {
    case FmClass::kConvexYes: return "convex-yes";
    case FmClass::kConcaveNonlinearNo: return "concave-nonlinear-no";
    case FmClass::kDeferred: return "deferred";
  }
  return "unknown";
}

CorollaryResult corollary_check(const CountingFunction& g) {
  CorollaryResult result;
  const auto check = fm_condition_check(g);
  result.condition_satisfied = check.satisfies;
  if (!check.nonconstant) {
    // Constant g is convex yet fails condition (i).
    result.classification = FmClass::kDeferred;
  } else if (is_convex(g)) {
    result.classification = FmClass::kConvexYes;
  } else if (is_concave(g)) {
    result.classification = FmClass::kConcaveNonlinearNo;
  }
  switch (result.classification) {
    case FmClass::kConvexYes:
      result.consistent = check.satisfies;
      break;
    case FmClass::kConcaveNonlinearNo:
      result.consistent = !check.satisfies;
      break;
    case FmClass::kDeferred:
      result.consistent = true;
      break;
  }
  return result;
}

std::string witness_to_json(const FmWitness& witness) {
  nlohmann::json out;
  out["m"] = witness.election.num_candidates();
  out["k"] = witness.k;
  out["voters"] = witness.election.num_voters();
  out["n_used"] = witness.n_used;
  out["majority_committee"] =
      committee_json(witness.election, witness.majority_committee);
  out["beating_committee"] =
      committee_json(witness.election, witness.beating_committee);
  switch (witness.source) {
    case FmWitness::Source::kCounting:
      out["source"] = "counting";
      out["k1"] = witness.k1;
      out["k2"] = witness.k2;
      break;
    case FmWitness::Source::kGeneral:
      out["source"] = "general";
      out["t"] = witness.t;
      break;
    case FmWitness::Source::kConstant:
      out["source"] = "constant";
      break;
  }
  return out.dump(2);
}

}  // namespace committee
