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

#include <doctest.h>

#include <sstream>

#include "support/fixtures.hpp"
#include "uxrank/io/bench.hpp"
#include "uxrank/io/serialize.hpp"
#include "uxrank/util/strings.hpp"

using namespace uxrank;
using namespace uxrank::io;

namespace {

const std::vector<int> kKs{3, 5, 10};

std::vector<EvaluationReport> stored_reports() {
  return {load_report(testing::quizapp() / "reports" / "nielsen.json"),
          load_report(testing::quizapp() / "reports" / "walkthrough.json")};
}

int count_rows(const std::string& tables, const std::string& label) {
  std::istringstream in(tables);
  int n = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("| " + label + " ", 0) == 0) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("bench matches the golden agreement report") {
  const auto golden = json::parse(
      util::read_file((testing::quizapp() / "golden" / "agreement.json").string()));
  const auto report = run_bench({testing::quizapp() / "reports" / "nielsen.json",
                                 testing::quizapp() / "reports" / "walkthrough.json"},
                                testing::quizapp() / "groundtruth.json", kKs);
  CHECK(to_json(report) == golden);
}

TEST_CASE("tables have one row per model plus the average") {
  const auto reports = stored_reports();
  const auto truth = load_ground_truth(testing::quizapp() / "groundtruth.json");
  const auto tables = render_tables(run_bench(reports, truth, kKs));
  // kappa, hit rate and accuracy tables
  CHECK(count_rows(tables, "vision-a") == 3);
  CHECK(count_rows(tables, "vision-b") == 3);
  CHECK(count_rows(tables, "Average LLM") == 3);
  CHECK(tables.find("Nielsen @10") != std::string::npos);
  CHECK(tables.find("Walkthrough / expert-2") != std::string::npos);
}

TEST_CASE("ground truth problems are fatal") {
  const auto reports = stored_reports();
  const auto truth = load_ground_truth(testing::quizapp() / "groundtruth.json");

  GroundTruth empty;
  CHECK_THROWS_AS(run_bench(reports, empty, kKs), BenchError);

  auto by_model = truth;
  by_model.assessments[0].rater = RaterId::model("vision-a");
  CHECK_THROWS_AS(run_bench(reports, by_model, kKs), BenchError);

  auto unknown = truth;
  unknown.assessments[0].task_id = "no-such-task";
  CHECK_THROWS_AS(run_bench(reports, unknown, kKs), BenchError);

  auto wrong_scheme = truth;
  wrong_scheme.assessments[0].rating = wrong_scheme.assessments[0].rating.is_grade()
                                           ? Rating::binary(Verdict::Failed)
                                           : Rating::grade(2);
  CHECK_THROWS_AS(run_bench(reports, wrong_scheme, kKs), BenchError);
}

TEST_CASE("the same model and method in two reports is rejected") {
  const auto nielsen = load_report(testing::quizapp() / "reports" / "nielsen.json");
  const std::vector<EvaluationReport> twice{nielsen, nielsen};
  const auto truth = load_ground_truth(testing::quizapp() / "groundtruth.json");
  CHECK_THROWS_AS(run_bench(twice, truth, kKs), BenchError);
}

TEST_CASE("a single k restricts every table") {
  const auto reports = stored_reports();
  const auto truth = load_ground_truth(testing::quizapp() / "groundtruth.json");
  const std::vector<int> k3{3};
  const auto report = run_bench(reports, truth, k3);
  const auto tables = render_tables(report);
  CHECK(tables.find("@3") != std::string::npos);
  CHECK(tables.find("@5") == std::string::npos);
  CHECK(tables.find("@10") == std::string::npos);
}
