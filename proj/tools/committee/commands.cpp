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
#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "committee/axioms.hpp"
#include "committee/election_io.hpp"
#include "committee/errors.hpp"
#include "committee/fpt.hpp"
#include "committee/generators.hpp"

namespace committee::cli {
namespace {

struct Loaded {
  ElectionFile file;
  std::string fingerprint;
};

Loaded load(const std::string& path) {
  const std::string text = read_file(path);
  return {parse_election(text), fingerprint(text)};
}

RuleChoice rule_for(const RuleArgs& args, const ElectionFile& file) {
  std::optional<std::size_t> k = args.k;
  if (!k && args.g.empty()) k = file.k;
  return choose_rule(args.rule, args.g, args.t, file.election.num_candidates(), k);
}

SingleWinnerScoring separable_gamma(const RuleChoice& rule, std::size_t m) {
  if (auto gamma = rule.evaluator.separable_scores()) return *gamma;
  if (rule.g && is_linear(*rule.g)) {
    std::vector<Rational> gamma(m, Rational(0));
    for (std::size_t i = 0; i < rule.g->k(); ++i) gamma[i] = (*rule.g)(1);
    return SingleWinnerScoring(std::move(gamma));
  }
  throw PreconditionError("the separable algorithm needs a weakly separable rule");
}

const CountingFunction& need_counting(const RuleChoice& rule,
                                      const std::string& algorithm) {
  if (!rule.g) {
    throw PreconditionError(algorithm + " needs a top-k-counting rule");
  }
  return *rule.g;
}

std::string select_algorithm(const RuleChoice& rule, const Election& election) {
  if (rule.evaluator.separable_scores()) return "separable";
  if (!rule.g) return "brute-force";
  const CountingFunction& g = *rule.g;
  if (is_linear(g)) return "separable";
  if (g == CountingFunction::step(g.k())) return "perfectionist";
  const auto sing = singularity(g);
  if (!sing.infinite() && g.k() - *sing.value <= 2) return "near-perfectionist";
  if (is_concave(g)) return election.num_voters() <= 14 ? "fpt-voters" : "greedy";
  return "brute-force";
}

WinnerResult run_algorithm(const std::string& algorithm, const RuleChoice& rule,
                           const Election& election, std::optional<std::size_t> q,
                           const WinnerOptions& options) {
  const std::size_t k = rule.evaluator.k();
  if (algorithm == "brute-force") {
    return brute_force_winners(rule.evaluator, election, options);
  }
  if (algorithm == "separable") {
    return separable_winners(separable_gamma(rule, election.num_candidates()),
                             election, k, options);
  }
  const CountingFunction& g = need_counting(rule, algorithm);
  if (algorithm == "perfectionist") {
    if (g != CountingFunction::step(k)) {
      throw PreconditionError("perfectionist needs g = (0,...,0,1)");
    }
    return perfectionist_winners(election, k, options);
  }
  if (algorithm == "near-perfectionist") {
    if (!q) {
      const auto sing = k >= 2 ? singularity(g) : Singularity{};
      q = sing.infinite() ? 0 : k - *sing.value;
    }
    return near_perfectionist_winners(g, election, *q, options);
  }
  if (algorithm == "greedy") return greedy_concave(g, election);
  if (algorithm == "fpt-voters") return fpt_voters_winners(g, election);
  if (algorithm == "exact-counting") {
    return exact_counting_optimum(g, election, options);
  }
  throw UsageError("unknown algorithm '" + algorithm + "'");
}

std::string bool_text(bool value) { return value ? "true" : "false"; }

std::string winners_text(const Election& election, const WinnerResult& r,
                         const std::string& rule, bool decimal) {
  std::ostringstream out;
  out << "rule: " << rule << "\n"
      << "algorithm: " << r.algorithm << "\n"
      << "score: " << show(r.best_score, decimal) << "\n"
      << "exact: " << bool_text(r.exact) << "\n"
      << "ties: " << r.winners.size()
      << (r.truncated ? " (truncated; showing the least committee)" : "")
      << (r.ties_complete ? "" : " (one optimum reconstructed)") << "\n";
  for (const auto& w : r.winners) out << election.format(w) << "\n";
  return out.str();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

RunReport cmd_winners(const WinnersArgs& args, const GlobalOptions& global) {
  const auto loaded = load(args.file);
  const Election& e = loaded.file.election;
  const RuleChoice rule = rule_for(args.rule, loaded.file);
  const std::string algorithm =
      args.algorithm == "auto" ? select_algorithm(rule, e) : args.algorithm;
  const WinnerResult r = run_algorithm(algorithm, rule, e, args.q, global.winner_options());

  RunReport report;
  report.fingerprint = loaded.fingerprint;
  report.algorithm = r.algorithm;
  report.result = winners_json(e, r);
  report.result["rule"] = rule.name;
  report.result["k"] = rule.evaluator.k();
  if (global.decimal) {
    report.result["score_decimal"] = r.best_score.convert_to<double>();
  }
  report.text = winners_text(e, r, rule.name, global.decimal);
  return report;
}

RunReport cmd_score(const ScoreArgs& args, const GlobalOptions& global) {
  const auto loaded = load(args.file);
  const Election& e = loaded.file.election;
  const Committee w = parse_committee(e, args.committee);
  RuleArgs rule_args = args.rule;
  if (!rule_args.k && rule_args.g.empty()) rule_args.k = w.size();
  const RuleChoice rule = rule_for(rule_args, loaded.file);
  const Rational score = committee_score(rule.evaluator, e, w);

  RunReport report;
  report.fingerprint = loaded.fingerprint;
  report.algorithm = "score";
  report.result = {{"rule", rule.name},
                   {"committee", labels_json(e, w)},
                   {"score", format_rational(score)}};
  if (global.decimal) report.result["score_decimal"] = score.convert_to<double>();
  report.text = "rule: " + rule.name + "\ncommittee: " + e.format(w) +
                "\nscore: " + show(score, global.decimal) + "\n";
  return report;
}

RunReport cmd_analyze(const AnalyzeArgs& args, const GlobalOptions& global) {
  const CountingFunction g = CountingFunction::parse(args.g);
  if (args.k && *args.k != g.k()) {
    throw PreconditionError("g has k = " + std::to_string(g.k()) + " but --k is " +
                            std::to_string(*args.k));
  }
  const std::string sing = g.k() >= 2 ? singularity(g).to_string() : "undefined";
  const auto fm = fm_condition_check(g);
  const auto owa = counting_to_owa(g);
  const auto corollary = corollary_check(g);

  RunReport report;
  report.fingerprint = fingerprint(g.to_string());
  report.algorithm = "analyze-g";
  nlohmann::json owa_json = nlohmann::json::array();
  std::string owa_text;
  for (const auto& w : owa.weights()) {
    owa_json.push_back(format_rational(w));
    owa_text += (owa_text.empty() ? "" : ",") + show(w, global.decimal);
  }
  nlohmann::json violation = nullptr;
  std::string fm_text = fm.satisfies ? "yes" : "no";
  if (fm.violation) {
    violation = {{"k1", fm.violation->k1},
                 {"k2", fm.violation->k2},
                 {"lhs", format_rational(fm.violation->lhs)},
                 {"rhs", format_rational(fm.violation->rhs)}};
    fm_text += " (k1 = " + std::to_string(fm.violation->k1) +
               ", k2 = " + std::to_string(fm.violation->k2) + ")";
  } else if (!fm.nonconstant) {
    fm_text += " (g is constant)";
  }
  report.result = {{"g", g.to_string()},
                   {"k", g.k()},
                   {"singularity", sing},
                   {"convex", is_convex(g)},
                   {"concave", is_concave(g)},
                   {"linear", is_linear(g)},
                   {"fixed_majority",
                    {{"satisfies", fm.satisfies},
                     {"nonconstant", fm.nonconstant},
                     {"violation", violation}}},
                   {"owa", owa_json},
                   {"corollary", to_string(corollary.classification)}};
  std::ostringstream out;
  out << "g: " << g.to_string() << "\n"
      << "k: " << g.k() << "\n"
      << "singularity: " << sing << "\n"
      << "convex: " << bool_text(is_convex(g)) << "\n"
      << "concave: " << bool_text(is_concave(g)) << "\n"
      << "linear: " << bool_text(is_linear(g)) << "\n"
      << "fixed-majority: " << fm_text << "\n"
      << "owa: (" << owa_text << ")\n"
      << "corollary: " << to_string(corollary.classification) << "\n";
  report.text = out.str();
  return report;
}

RunReport cmd_check_fm(const CheckFmArgs& args, const GlobalOptions& global) {
  const auto loaded = load(args.file);
  const Election& e = loaded.file.election;
  const RuleChoice rule = rule_for(args.rule, loaded.file);
  const auto check = empirical_fm_check(rule.evaluator, e, global.winner_options());

  std::string verdict(to_string(check.verdict));
  std::transform(verdict.begin(), verdict.end(), verdict.begin(), ::toupper);
  RunReport report;
  report.fingerprint = loaded.fingerprint;
  report.algorithm = check.winners ? check.winners->algorithm : "none";
  report.result = {{"rule", rule.name},
                   {"k", rule.evaluator.k()},
                   {"verdict", std::string(to_string(check.verdict))}};
  std::ostringstream out;
  out << "rule: " << rule.name << "\n" << "fixed-majority: " << verdict << "\n";
  if (check.majority) {
    report.result["majority_committee"] = labels_json(e, *check.majority);
    out << "majority committee: " << e.format(*check.majority) << "\n";
  }
  if (check.winners) {
    report.result["winners"] = winners_json(e, *check.winners);
    out << winners_text(e, *check.winners, rule.name, global.decimal);
  }
  report.text = out.str();
  return report;
}

RunReport cmd_witness(const WitnessArgs& args, const GlobalOptions& global) {
  if (args.m == 0) throw UsageError("--m is required");
  const RuleChoice rule =
      choose_rule(args.rule.rule, args.rule.g, args.rule.t, args.m, args.rule.k);
  RunReport report;
  report.fingerprint = fingerprint(rule.name + " m=" + std::to_string(args.m));
  report.result = {{"rule", rule.name}, {"m", args.m}, {"k", rule.evaluator.k()}};

  std::optional<FmWitness> witness;
  std::optional<ScoringEvaluator> verifier;
  if (rule.g) {
    report.algorithm = "witness-counting";
    witness = witness_counting(*rule.g, args.m);
    verifier = rule.evaluator;
  } else {
    report.algorithm = "witness-general";
    if (args.m > kMaxTabulatedCandidates) {
      throw PreconditionError("general witnesses need m <= " +
                              std::to_string(kMaxTabulatedCandidates));
    }
    verifier = ScoringEvaluator::tabulate(rule.evaluator);
    const auto general = witness_general(*verifier);
    witness = general.witness;
    if (general.induced_g) {
      report.result["induced_g"] = CountingFunction(*general.induced_g).to_string();
    }
  }
  if (!witness) {
    report.result["witness"] = false;
    report.text = "rule: " + rule.name +
                  "\nno witness: the rule satisfies the fixed-majority criterion\n";
    return report;
  }

  const std::string election_path = args.out + ".elec";
  const std::string sidecar_path = args.out + ".json";
  write_election_file(election_path, witness->election, witness->k);
  {
    std::ofstream sidecar(sidecar_path);
    if (!sidecar) throw Error("cannot write '" + sidecar_path + "'");
    sidecar << witness_to_json(*witness) << "\n";
  }
  const bool verified = verify_witness(*witness, *verifier, global.winner_options());
  report.exit_code = verified ? kExitOk : kExitFailure;
  report.result["witness"] = true;
  report.result["election_file"] = election_path;
  report.result["sidecar_file"] = sidecar_path;
  report.result["voters"] = witness->election.num_voters();
  report.result["n_used"] = witness->n_used;
  report.result["self_verification"] = verified ? "pass" : "fail";
  const Election& e = witness->election;
  report.result["majority_committee"] = labels_json(e, witness->majority_committee);
  report.result["beating_committee"] = labels_json(e, witness->beating_committee);
  std::ostringstream out;
  out << "rule: " << rule.name << "\n"
      << "wrote " << election_path << " and " << sidecar_path << "\n"
      << "voters: " << e.num_voters() << " (n = " << witness->n_used << ")\n"
      << "majority committee: " << e.format(witness->majority_committee) << "\n"
      << "beating committee: " << e.format(witness->beating_committee) << "\n"
      << "self-verification: " << (verified ? "PASS" : "FAIL") << "\n";
  report.text = out.str();
  return report;
}

RunReport cmd_gen(const GenArgs& args, const GlobalOptions& global) {
  RunReport report;
  report.algorithm = "gen-" + args.kind;
  std::optional<Election> election;
  std::size_t k = args.k;
  std::string comments;
  if (args.kind == "ic") {
    election = gen_impartial_culture(args.m, args.n, global.seed);
    report.fingerprint = fingerprint("ic " + std::to_string(args.m) + " " +
                                     std::to_string(args.n) + " " +
                                     std::to_string(global.seed));
  } else if (args.kind == "fm") {
    auto profile = gen_fixed_majority_profile(args.m, args.n, k, global.seed);
    report.result["planted"] = labels_json(profile.election, profile.planted);
    comments = "# planted " + profile.election.format(profile.planted) + "\n";
    election = std::move(profile.election);
    report.fingerprint = fingerprint("fm " + std::to_string(args.m) + " " +
                                     std::to_string(args.n) + " " + std::to_string(k) +
                                     " " + std::to_string(global.seed));
  } else if (args.kind == "x3c") {
    const std::string text = read_file(args.input);
    report.fingerprint = fingerprint(text);
    auto r = gen_from_x3c(X3cInstance::parse(text));
    k = r.k;
    report.result["target"] = format_rational(r.target);
    report.result["padding_sets"] = r.padding_sets;
    report.result["uncovered_element"] = r.uncovered_element;
    comments = "# alpha_k-CC target " + format_rational(r.target) + "\n";
    if (r.padding_sets) {
      comments += "# padding sets " + std::to_string(r.padding_sets) + "\n";
    }
    if (r.uncovered_element) comments += "# some element lies in no set\n";
    election = std::move(r.election);
  } else if (args.kind == "clique") {
    const std::string text = read_file(args.input);
    report.fingerprint = fingerprint(text);
    if (args.g.empty()) throw UsageError("gen clique needs --g");
    auto r = gen_from_clique(Graph::parse(text), args.h, CountingFunction::parse(args.g),
                             args.c);
    k = r.k;
    report.result["target"] = format_rational(r.target);
    report.result["g"] = r.g.to_string();
    report.result["fixed_no_instance"] = r.fixed_no_instance;
    comments = "# g " + r.g.to_string() + "\n# target " + format_rational(r.target) + "\n";
    if (r.fixed_no_instance) comments += "# fixed no-instance\n";
    election = std::move(r.election);
  } else {
    throw UsageError("unknown generator '" + args.kind + "'");
  }

  const std::string body = comments + serialize_election(*election, k);
  report.result["kind"] = args.kind;
  report.result["m"] = election->num_candidates();
  report.result["n"] = election->num_voters();
  report.result["k"] = k;
  if (!args.out.empty()) {
    std::ofstream out(args.out, std::ios::binary);
    if (!out) throw Error("cannot write '" + args.out + "'");
    out << body;
    report.result["file"] = args.out;
    report.text = "wrote " + args.out + " (m = " +
                  std::to_string(election->num_candidates()) + ", n = " +
                  std::to_string(election->num_voters()) + ", k = " + std::to_string(k) +
                  ")\n" + comments;
  } else {
    report.result["election"] = body;
    report.text = body;
  }
  return report;
}

RunReport cmd_bench(const BenchArgs& args, const GlobalOptions& global) {
  const WinnerOptions options = global.winner_options();
  struct Row {
    std::size_t size, m, n, k;
    std::string algorithm;
    std::optional<double> seconds;
    std::string score;
    std::string status;
  };
  std::vector<Row> rows;

  auto timed = [&](std::size_t size, const Election& e, std::size_t k,
                   const std::string& name, auto&& solve) {
    Row row{size, e.num_candidates(), e.num_voters(), k, name, std::nullopt, "", "ok"};
    try {
      double best = -1;
      WinnerResult r;
      for (std::size_t rep = 0; rep < std::max<std::size_t>(1, args.reps); ++rep) {
        const auto start = std::chrono::steady_clock::now();
        r = solve();
        const double s = seconds_since(start);
        best = best < 0 ? s : std::min(best, s);
      }
      row.seconds = best;
      row.score = format_rational(r.best_score);
      row.algorithm = r.algorithm;
    } catch (const CapExceeded&) {
      row.status = "cap-exceeded";
    } catch (const PreconditionError&) {
      row.status = "precondition";
    }
    rows.push_back(std::move(row));
  };

  std::vector<std::size_t> sizes = args.sizes;
  const std::string& suite = args.suite;
  if (suite == "brute" || suite == "greedy") {
    if (sizes.empty()) sizes = {10, 12, 14, 16, 18, 20};
    const auto g = CountingFunction::harmonic(3);
    for (std::size_t m : sizes) {
      const Election e = gen_impartial_culture(m, 12, global.seed + m);
      const auto eval = counting_evaluator(g, m);
      if (suite == "greedy") {
        timed(m, e, 3, "greedy", [&] { return greedy_concave(g, e); });
      }
      timed(m, e, 3, "brute-force", [&] { return brute_force_winners(eval, e, options); });
    }
  } else if (suite == "fpt-voters") {
    if (sizes.empty()) sizes = {4, 6, 8, 10, 12, 14};
    const auto g = CountingFunction::harmonic(3);
    for (std::size_t n : sizes) {
      const Election e = gen_impartial_culture(12, n, global.seed + n);
      timed(n, e, 3, "fpt-voters", [&] {
        return fpt_voters_winners(g, e, std::max<std::size_t>(n, kDefaultVoterCap));
      });
    }
  } else if (suite == "near-perf") {
    if (sizes.empty()) sizes = {10, 20, 30};
    const auto g = CountingFunction::parse("0,1,2,4,6");
    for (std::size_t m : sizes) {
      const Election e = gen_impartial_culture(m, 10, global.seed + m);
      timed(m, e, 4, "near-perfectionist",
            [&] { return near_perfectionist_winners(g, e, 1, options); });
    }
  } else {
    throw UsageError("unknown bench suite '" + suite + "'");
  }

  RunReport report;
  report.algorithm = "bench-" + suite;
  report.fingerprint = fingerprint("bench " + suite + " " + std::to_string(global.seed));
  std::ostringstream csv;
  csv << "suite,size,m,n,k,algorithm,seconds,score,status\n";
  nlohmann::json json_rows = nlohmann::json::array();
  for (const auto& row : rows) {
    csv << suite << ',' << row.size << ',' << row.m << ',' << row.n << ',' << row.k << ','
        << row.algorithm << ',';
    if (row.seconds) csv << *row.seconds;
    csv << ',' << row.score << ',' << row.status << '\n';
    json_rows.push_back({{"size", row.size},
                         {"m", row.m},
                         {"n", row.n},
                         {"k", row.k},
                         {"algorithm", row.algorithm},
                         {"seconds", row.seconds ? nlohmann::json(*row.seconds) : nullptr},
                         {"score", row.score},
                         {"status", row.status}});
  }
  report.result = {{"suite", suite}, {"rows", json_rows}};
  report.text = csv.str();
  return report;
}

}  // namespace committee::cli
