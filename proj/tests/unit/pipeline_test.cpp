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

#include <atomic>

#include "support/fixtures.hpp"
#include "uxrank/gateway/transport.hpp"
#include "uxrank/io/pipeline.hpp"
#include "uxrank/io/project_loader.hpp"
#include "uxrank/io/serialize.hpp"
#include "uxrank/util/strings.hpp"

using namespace uxrank;
using namespace uxrank::io;

namespace {

class CountingTransport final : public gateway::HttpTransport {
 public:
  gateway::HttpResponse post(const gateway::HttpRequest&) override {
    ++calls;
    throw gateway::TransportError(false, "offline");
  }
  std::atomic<int> calls{0};
};

EvaluationOptions replay(EvalMethod method, std::string timestamp = "2026-01-01T00:00:00Z") {
  EvaluationOptions o;
  o.method = method;
  o.mode = ProviderMode::Replay;
  o.timestamp = std::move(timestamp);
  return o;
}

}  // namespace

TEST_CASE("replay run reproduces the stored report byte for byte") {
  testing::QuietLog quiet;
  const auto project = load_project(testing::quizapp());
  for (const auto* name : {"nielsen", "walkthrough"}) {
    CAPTURE(name);
    const auto path = testing::quizapp() / "reports" / (std::string(name) + ".json");
    const auto stored = load_report(path);
    const auto report = run_evaluation(
        project, replay(*method_from_token(name), stored.timestamp));
    CHECK(dump(to_json(report)) == util::read_file(path.string()));
  }
}

TEST_CASE("replay is deterministic and offline") {
  testing::QuietLog quiet;
  const auto project = load_project(testing::quizapp());
  auto transport = std::make_shared<CountingTransport>();
  auto options = replay(EvalMethod::NielsenHeuristics);
  options.transport = transport;
  const auto before = gateway::network_attempts();
  options.parallelism = 1;
  const auto a = dump(to_json(run_evaluation(project, options)));
  options.parallelism = 8;
  const auto b = dump(to_json(run_evaluation(project, options)));
  CHECK(a == b);
  CHECK(gateway::network_attempts() == before);
  CHECK(transport->calls == 0);
}

TEST_CASE("a rejected reply becomes exactly one warning") {
  testing::QuietLog quiet;
  const auto project = load_project(testing::quizapp());
  const auto report = run_evaluation(project, replay(EvalMethod::NielsenHeuristics));
  const auto planned = plan_calls(project,
                                  EvalMethod::NielsenHeuristics, {});
  CHECK(report.raw_assessments.size() == planned.size() - 1);
  REQUIRE(report.warnings.size() == 1);
  const auto& w = report.warnings[0];
  CHECK(w.model_id == "vision-b");
  CHECK(w.task_id == "publish-quiz");
  CHECK(w.criterion_id == "nielsen-05");
  CHECK(w.message.find("Unparseable") != std::string::npos);
  // That task has a single screenshot, so the cell is missing from the aggregate.
  CHECK(report.aggregated_assessments.size() == 2 * 8 * 10 - 1);
}

TEST_CASE("walkthrough reports hold verdicts only") {
  testing::QuietLog quiet;
  const auto project = load_project(testing::quizapp());
  const auto report = run_evaluation(project, replay(EvalMethod::CognitiveWalkthrough));
  CHECK(report.warnings.empty());
  CHECK_FALSE(report.raw_assessments.empty());
  for (const auto& a : report.raw_assessments) CHECK_FALSE(a.rating.is_grade());
  for (const auto& r : report.results) {
    for (const auto& s : r.scores) {
      CHECK(s.score >= 0.0);
      CHECK(s.score <= 1.0);
    }
  }
}

TEST_CASE("results recompute from the aggregated assessments") {
  const auto stored = load_report(testing::quizapp() / "reports" / "nielsen.json");
  CHECK(recompute_results(stored) == stored.results);
  REQUIRE(stored.results.size() == 2);
  CHECK(stored.results[0].rater == RaterId::model("vision-a"));
}

TEST_CASE("planning order and errors") {
  const auto project = load_project(testing::quizapp());
  const auto calls = plan_calls(project, EvalMethod::CognitiveWalkthrough, {"vision-a"});
  REQUIRE_FALSE(calls.empty());
  CHECK(calls[0].task->id == project.project.tasks[0].id);
  CHECK(calls[0].criterion.id == "cw-01");
  CHECK(calls[1].criterion.id == "cw-02");
  for (const auto& c : calls) {
    CHECK(c.model->id == "vision-a");
    CHECK(c.request);
  }
  CHECK_THROWS_AS(plan_calls(project, EvalMethod::NielsenHeuristics, {"nope"}), EvaluationError);
}

TEST_CASE("replay without fixtures fails every cell") {
  testing::QuietLog quiet;
  testing::TempDir dir;
  const auto project = load_project(testing::quizapp());
  auto options = replay(EvalMethod::NielsenHeuristics);
  options.fixtures_dir = dir.path();
  CHECK_THROWS_AS(run_evaluation(project, options), EvaluationError);
}
