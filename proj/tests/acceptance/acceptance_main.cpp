// Copyright 2026 The uxrank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance gate: one line per criterion, non-zero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracle/kappa_oracle.hpp"
#include "support/fixtures.hpp"
#include "support/parser_corpus.hpp"
#include "uxrank/gateway/transport.hpp"
#include "uxrank/io/bench.hpp"
#include "uxrank/io/pipeline.hpp"
#include "uxrank/io/project_loader.hpp"
#include "uxrank/io/serialize.hpp"
#include "uxrank/metrics/benchmark.hpp"
#include "uxrank/util/strings.hpp"

using namespace uxrank;
using Clock = std::chrono::steady_clock;

namespace {

// Empty on success, otherwise the reason for failure.
using Check = std::function<std::string()>;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Rating> as_grades(const std::vector<int>& v) {
  std::vector<Rating> out;
  for (int g : v) out.push_back(Rating::grade(g));
  return out;
}

std::vector<Rating> as_verdicts(const std::vector<int>& v) {
  std::vector<Rating> out;
  for (int f : v) out.push_back(Rating::binary(f ? Verdict::Failed : Verdict::Passed));
  return out;
}

metrics::KappaResult weighted(const std::vector<int>& a, const std::vector<int>& b) {
  const auto ra = as_grades(a), rb = as_grades(b);
  return metrics::weighted_kappa(metrics::RatingPairs::zip(ra, rb));
}

metrics::KappaResult unweighted(const std::vector<int>& a, const std::vector<int>& b) {
  const auto ra = as_verdicts(a), rb = as_verdicts(b);
  return metrics::cohen_kappa(metrics::RatingPairs::zip(ra, rb));
}

std::string weighted_kappa_oracle() {
  const auto start = Clock::now();
  std::mt19937 rng(20260101);
  std::uniform_int_distribution<int> len(4, 50), grade(1, 5), skew(0, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = len(rng);
    std::vector<int> a(n), b(n);
    for (int i = 0; i < n; ++i) {
      a[i] = grade(rng);
      // Correlated pairs exercise the upper part of the range too.
      b[i] = skew(rng) == 0 ? grade(rng) : std::clamp(a[i] + skew(rng) - 1, 1, 5);
    }
    const auto got = weighted(a, b);
    const auto want = oracle::weighted_kappa(a, b);
    if (got.defined() != want.has_value()) return "definedness differs in trial " + std::to_string(trial);
    if (want && std::abs(*got.value - *want) > 1e-9) {
      std::ostringstream s;
      s << "trial " << trial << ": " << *got.value << " vs oracle " << *want;
      return s.str();
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 5.0) return "took " + std::to_string(elapsed) + " s";
  return "";
}

std::string unweighted_golden() {
  const auto same = unweighted({0, 1, 1, 0, 1}, {0, 1, 1, 0, 1});
  if (!same.defined() || *same.value != 1.0) return "identical vectors did not give 1.0";
  // P,P,F,F against P,F,P,F
  const auto zero = unweighted({0, 0, 1, 1}, {0, 1, 0, 1});
  if (!zero.defined() || std::abs(*zero.value) > 1e-12) return "balanced case is not 0";
  const auto constant = unweighted({0, 0, 0, 0}, {0, 0, 0, 0});
  if (constant.defined()) return "both-constant case is defined";
  return "";
}

std::string kappa_range() {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> len(2, 30), grade(1, 5), bit(0, 1), coin(0, 1);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = len(rng);
    const bool graded = coin(rng) == 1;
    std::vector<int> a(n), b(n);
    for (int i = 0; i < n; ++i) {
      a[i] = graded ? grade(rng) : bit(rng);
      b[i] = graded ? grade(rng) : bit(rng);
    }
    const auto k = graded ? weighted(a, b) : unweighted(a, b);
    if (k.defined() && (*k.value < -1.0 || *k.value > 1.0)) {
      return "kappa " + std::to_string(*k.value) + " out of range in trial " + std::to_string(trial);
    }
    const bool varied = std::set<int>(a.begin(), a.end()).size() >= 2;
    const auto self = graded ? weighted(a, a) : unweighted(a, a);
    if (varied && (!self.defined() || *self.value != 1.0)) {
      return "kappa(x, x) != 1 in trial " + std::to_string(trial);
    }
  }
  return "";
}

ranking::SeverityRanking random_ranking(std::mt19937& rng) {
  std::uniform_int_distribution<int> grade(1, 5);
  std::vector<ranking::SeverityScore> scores;
  for (int t = 0; t < 10; ++t) {
    // Coarse scores so that ties are common.
    scores.push_back({"task-" + std::to_string(t), EvalMethod::NielsenHeuristics,
                      (grade(rng) + grade(rng)) / 2.0, 2});
  }
  return ranking::rank_tasks(scores);
}

std::string topk_laws() {
  const auto start = Clock::now();
  std::mt19937 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const auto llm = random_ranking(rng);
    const auto expert = random_ranking(rng);
    std::vector<std::string> previous;
    for (int k = 1; k <= 10; ++k) {
      const int hit = metrics::hit_rate_at_k(llm, expert, k);
      const double acc = metrics::accuracy_at_k(llm, expert, k);
      const auto where = " (trial " + std::to_string(trial) + ", k=" + std::to_string(k) + ")";
      if ((acc > 0.0) != (hit == 1)) return "accuracy > 0 and hit rate disagree" + where;
      const double scaled = acc * k;
      if (acc < 0.0 || acc > 1.0 || std::abs(scaled - std::round(scaled)) > 1e-12) {
        return "accuracy not a multiple of 1/k" + where;
      }
      const auto top = ranking::top_k(llm, k);
      if (!std::equal(previous.begin(), previous.end(), top.begin())) {
        return "top_k not monotone in k" + where;
      }
      previous = top;
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 5.0) return "took " + std::to_string(elapsed) + " s";
  return "";
}

std::string average_rows() {
  const std::vector<double> walkthrough{1, 1, 1, 0, 1, 0};
  const std::vector<double> nielsen{0, 0, 1, 0, 0, 0};
  const double a = metrics::average_row(std::span<const double>(walkthrough));
  const double b = metrics::average_row(std::span<const double>(nielsen));
  if (std::abs(a - 0.667) > 1e-3) return "first row averaged to " + std::to_string(a);
  if (std::abs(b - 0.167) > 1e-3) return "second row averaged to " + std::to_string(b);
  return "";
}

std::string aggregation_properties() {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> count(1, 8), grade(1, 5), bit(0, 1), coin(0, 1);
  const auto rater = RaterId::model("m");
  for (int trial = 0; trial < 1000; ++trial) {
    const bool graded = coin(rng) == 1;
    std::vector<Assessment> group;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
      const Rating r = graded ? Rating::grade(grade(rng))
                              : Rating::binary(bit(rng) ? Verdict::Failed : Verdict::Passed);
      auto a = testing::make_assessment("t", "c", rater, r, "s" + std::to_string(i));
      a.explanation = "e" + std::to_string(i);
      group.push_back(std::move(a));
    }
    const auto where = " (trial " + std::to_string(trial) + ")";
    const auto merged = ranking::aggregate_screenshots(group);
    for (const auto& a : group) {
      if (a.rating.worse_than(merged.rating)) return "aggregate is better than an input" + where;
    }
    const bool any_failed = std::any_of(group.begin(), group.end(), [](const Assessment& a) {
      return !a.rating.is_grade() && a.rating.verdict() == Verdict::Failed;
    });
    if (any_failed && merged.rating != Rating::binary(Verdict::Failed)) return "Failed does not dominate" + where;
    if (merged.screenshot_id) return "aggregate keeps a screenshot id" + where;

    std::vector<Assessment> twice{merged};
    if (ranking::aggregate_screenshots(twice) != merged) return "aggregation is not idempotent" + where;
    auto shuffled = group;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    if (ranking::aggregate_screenshots(shuffled).rating != merged.rating) {
      return "aggregate rating depends on order" + where;
    }

    // Mean severity over criteria of one task.
    std::vector<Assessment> criteria;
    for (int i = 0; i < n; ++i) {
      auto a = group[i];
      a.criterion_id = "c" + std::to_string(i);
      a.screenshot_id.reset();
      criteria.push_back(std::move(a));
    }
    const auto score = ranking::severity_score("t", criteria);
    const double lo = graded ? 1.0 : 0.0, hi = graded ? 5.0 : 1.0;
    if (score.score < lo || score.score > hi) return "severity out of bounds" + where;
    std::shuffle(criteria.begin(), criteria.end(), rng);
    if (ranking::severity_score("t", criteria).score != score.score) {
      return "severity depends on order" + where;
    }
  }
  return "";
}

std::string without_timestamp(const io::EvaluationReport& report) {
  auto j = io::to_json(report);
  j.erase("timestamp");
  return j.dump();
}

std::string replay_determinism() {
  testing::QuietLog quiet;
  const auto project = io::load_project(testing::quizapp());
  if (project.project.personas.size() < 2 || project.project.tasks.size() < 4 ||
      project.project.models.size() < 2) {
    return "fixture project is too small";
  }
  const auto before = gateway::network_attempts();
  std::vector<std::string> runs;
  for (int i = 0; i < 3; ++i) {
    io::EvaluationOptions options;
    options.method = EvalMethod::NielsenHeuristics;
    options.mode = io::ProviderMode::Replay;
    options.parallelism = 1 + 3 * i;
    const auto report = io::run_evaluation(project, options);
    if (io::recompute_results(report) != report.results) return "results do not recompute";
    for (const auto& r : report.results) {
      if (ranking::rank_tasks(r.scores) != r.ranking) return "ranking does not follow its scores";
    }
    runs.push_back(without_timestamp(report));
  }
  if (gateway::network_attempts() != before) return "the network was used";
  if (runs[0] != runs[1] || runs[1] != runs[2]) return "reports differ between runs";
  return "";
}

std::string bench_golden() {
  const auto data = testing::quizapp();
  const std::vector<int> ks = metrics::kDefaultKs;
  const auto report = io::run_bench({data / "reports" / "nielsen.json", data / "reports" / "walkthrough.json"},
                                    data / "groundtruth.json", ks);
  const auto golden = io::json::parse(util::read_file((data / "golden" / "agreement.json").string()));
  if (io::to_json(report) != golden) return "agreement report differs from the golden file";

  const auto tables = io::render_tables(report);
  std::istringstream in(tables);
  std::map<std::string, int> rows;
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("| ", 0) != 0) continue;
    const auto end = line.find(" |", 2);
    rows[std::string(util::trim(line.substr(2, end - 2)))]++;
  }
  for (const auto& model : report.models) {
    if (rows[model] != 3) return "model '" + model + "' does not have one row per table";
  }
  if (rows["Average LLM"] != 3) return "average row missing";
  return "";
}

std::string parser_corpus() {
  const auto corpus = testing::parser_corpus();
  if (corpus.size() < 20) return "corpus has only " + std::to_string(corpus.size()) + " cases";
  int failed = 0;
  std::string first;
  for (const auto& c : corpus) {
    if (auto m = testing::corpus_mismatch(c)) {
      if (failed++ == 0) first = c.name + ": " + *m;
    }
  }
  if (failed) return std::to_string(failed) + " of " + std::to_string(corpus.size()) + " mismatched, first " + first;
  return "";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Check>> checks{
      {"weighted kappa matches the contingency-table oracle", weighted_kappa_oracle},
      {"unweighted kappa golden cases", unweighted_golden},
      {"kappa stays within [-1, 1] and kappa(x, x) = 1", kappa_range},
      {"top-k metric laws", topk_laws},
      {"average row arithmetic", average_rows},
      {"screenshot aggregation and mean severity properties", aggregation_properties},
      {"replay evaluation is deterministic and offline", replay_determinism},
      {"bench reproduces the golden agreement report", bench_golden},
      {"parser corpus", parser_corpus},
  };
  int failures = 0;
  for (const auto& [name, check] : checks) {
    std::string problem;
    try {
      problem = check();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    if (problem.empty()) {
      std::cout << "[PASS] " << name << "\n";
    } else {
      ++failures;
      std::cout << "[FAIL] " << name << ": " << problem << "\n";
    }
  }
  std::cout << (checks.size() - failures) << "/" << checks.size() << " acceptance criteria passed\n";
  return failures == 0 ? 0 : 1;
}
