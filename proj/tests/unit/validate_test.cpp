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

#include <algorithm>

#include "support/fixtures.hpp"
#include "uxrank/core/validate.hpp"
#include "uxrank/io/project_loader.hpp"

using namespace uxrank;

namespace {

bool has_finding(const std::vector<Finding>& findings, const std::string& path,
                 const std::string& fragment = "") {
  return std::any_of(findings.begin(), findings.end(), [&](const Finding& f) {
    return f.path == path && f.message.find(fragment) != std::string::npos;
  });
}

}  // namespace

TEST_CASE("the shipped project is valid") {
  const auto file = io::load_project(testing::quizapp());
  CHECK(validate_project(file.project, file.root).empty());
  CHECK(file.project.personas.size() == 2);
  CHECK(file.project.tasks.size() >= 4);
  CHECK(file.project.models.size() >= 2);
}

TEST_CASE("every violation is reported, not just the first") {
  auto project = io::load_project(testing::quizapp()).project;
  project.tasks[0].persona_id = "ghost";
  project.tasks[1].screenshots.push_back("missing-shot");
  project.tasks[2].screenshots.clear();
  project.personas[1].id = project.personas[0].id;
  project.models[1].temperature = 0.5;  // model without temperature support
  project.criteria = {"nielsen-01", "nielsen-01", "nope"};

  const auto findings = validate_project(project, testing::quizapp());
  CHECK(has_finding(findings, "tasks[0].persona_id", "ghost"));
  CHECK(has_finding(findings, "tasks[1].screenshots[1]", "missing-shot"));
  CHECK(has_finding(findings, "tasks[2].screenshots", "no screenshots"));
  CHECK(has_finding(findings, "personas[1].id", "duplicate"));
  CHECK(has_finding(findings, "models[1].temperature"));
  CHECK(has_finding(findings, "criteria[1]", "twice"));
  CHECK(has_finding(findings, "criteria[2]", "unknown"));
}

TEST_CASE("missing screenshot file is cited at the task") {
  auto project = io::load_project(testing::quizapp()).project;
  project.screenshots[2].path = "screenshots/does-not-exist.png";
  const auto findings = validate_project(project, testing::quizapp());
  CHECK(has_finding(findings, "screenshots[2].path", "not found"));
  CHECK(has_finding(findings, "tasks[1].screenshots[0]", "add-question"));
}

TEST_CASE("declared media type must match the file") {
  auto project = io::load_project(testing::quizapp()).project;
  project.screenshots[0].media_type = MediaType::Jpeg;
  CHECK(has_finding(validate_project(project, testing::quizapp()), "screenshots[0].media_type"));
}

TEST_CASE("custom criteria may not shadow built-ins") {
  auto project = io::load_project(testing::quizapp()).project;
  project.custom_criteria.push_back({"cw-01", EvalMethod::CognitiveWalkthrough, "x", "y"});
  project.custom_criteria.push_back({"mine", EvalMethod::NielsenHeuristics, "", ""});
  const auto findings = validate_project(project, testing::quizapp());
  CHECK(has_finding(findings, "custom_criteria[0].id", "built-in"));
  CHECK(has_finding(findings, "custom_criteria[1].title"));
  CHECK(has_finding(findings, "custom_criteria[1].prompt_text"));
}

TEST_CASE("assessment references and schemes") {
  const auto project = io::load_project(testing::quizapp()).project;
  std::vector<Assessment> items = {
      testing::make_assessment("create-quiz", "nielsen-01", RaterId::expert("e"), Rating::grade(2)),
      testing::make_assessment("nope", "nielsen-01", RaterId::expert("e"), Rating::grade(2)),
      testing::make_assessment("create-quiz", "cw-01", RaterId::expert("e"), Rating::grade(2)),
      testing::make_assessment("create-quiz", "nielsen-02", RaterId::expert("e"), Rating::grade(2),
                               "results"),
  };
  items.push_back(items[0]);
  items.back().rater = RaterId::model("m");
  items.back().explanation.clear();

  const auto findings = validate_assessments(project, items, "gt");
  CHECK(findings.size() == 4);
  CHECK(has_finding(findings, "gt[1].task_id"));
  CHECK(has_finding(findings, "gt[2].rating"));
  CHECK(has_finding(findings, "gt[3].screenshot_id"));
  CHECK(has_finding(findings, "gt[4].explanation"));
}
