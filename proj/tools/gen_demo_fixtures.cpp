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

// Writes the canned replay responses and the synthetic expert ground truth
// of a demo project:
//
//   uxrank-fixturegen <project-dir>
//
// Ratings come from a fixed per-task severity profile perturbed by a hash of
// the cell, so reruns produce identical files. Most replies are strict JSON;
// some are fenced or wrapped in prose, a few use the free-text fallback, and
// one is unparseable on purpose.

#include <algorithm>
#include <iostream>
#include <map>

#include "uxrank/io/pipeline.hpp"
#include "uxrank/io/project_loader.hpp"
#include "uxrank/io/serialize.hpp"
#include "uxrank/parser/response_parser.hpp"
#include "uxrank/util/hash.hpp"

namespace {

using namespace uxrank;

const std::map<std::string, int> kGradeBias = {
    {"create-quiz", 2}, {"add-question", 3}, {"publish-quiz", 1},
    {"take-quiz", 4},   {"review-results", 2}, {"edit-question", 3},
    {"schedule-quiz", 2}, {"find-deadline", 1}};
const std::map<std::string, int> kFailWeight = {
    {"create-quiz", 3}, {"add-question", 5}, {"publish-quiz", 2},
    {"take-quiz", 7},   {"review-results", 4}, {"edit-question", 4},
    {"schedule-quiz", 3}, {"find-deadline", 2}};

constexpr int kGradeShift[8] = {-1, 0, 0, 0, 0, 1, 1, 2};

std::uint64_t cell_hash(const std::string& text) {
  return std::stoull(util::sha256_hex(text).substr(0, 16), nullptr, 16);
}

Rating synth_rating(EvalMethod method, const std::string& task, std::uint64_t h) {
  if (method == EvalMethod::NielsenHeuristics) {
    const int bias = kGradeBias.contains(task) ? kGradeBias.at(task) : 2;
    return Rating::grade(std::clamp(bias + kGradeShift[h % 8], 1, 5));
  }
  const int weight = kFailWeight.contains(task) ? kFailWeight.at(task) : 3;
  return Rating::binary(static_cast<int>(h % 10) < weight ? Verdict::Failed : Verdict::Passed);
}

std::string synth_explanation(const Rating& rating, const Criterion& criterion,
                              const std::string& subject) {
  static const char* kGradePhrase[5] = {"fully meets", "mostly meets", "shows noticeable gaps in",
                                        "shows serious gaps in", "clearly violates"};
  if (rating.is_grade()) {
    return subject + " " + kGradePhrase[rating.grade_value() - 1] + " the heuristic '" +
           criterion.title + "'.";
  }
  return rating.passed() ? subject + " lets the persona answer '" + criterion.title + "' with yes."
                         : subject + " leaves the persona unable to answer '" + criterion.title +
                               "' with yes.";
}

std::string synth_reply(const Rating& rating, const std::string& explanation, std::uint64_t h) {
  const auto strict = parser::to_strict_json(rating, explanation);
  switch ((h >> 8) % 20) {
    case 0:
      if (rating.is_grade()) return "Grade: " + std::to_string(rating.grade_value()) + "/5\n" + explanation;
      return "Result: " + std::string(to_token(rating.verdict())) + "\n" + explanation;
    case 1:
      return "```json\n" + strict + "\n```";
    case 2:
      return "Here is my assessment of the screenshot.\n" + strict;
    default:
      return strict;
  }
}

bool is_broken_cell(const io::PlannedCall& call) {
  return call.model->id == "vision-b" && call.task->id == "publish-quiz" &&
         call.criterion.id == "nielsen-05";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: uxrank-fixturegen <project-dir>\n";
    return 1;
  }
  try {
    const auto project = io::load_project(argv[1]);
    gateway::FixtureStore store(project.root / "fixtures");
    int written = 0;
    for (auto method : {EvalMethod::NielsenHeuristics, EvalMethod::CognitiveWalkthrough}) {
      for (const auto& call : io::plan_calls(project, method, {})) {
        if (!call.request) throw std::runtime_error(call.error);
        const auto h = cell_hash(call.model->id + "/" + call.task->id + "/" + call.screenshot->id +
                                 "/" + call.criterion.id);
        std::string reply;
        if (is_broken_cell(call)) {
          reply = "I am sorry, but I cannot evaluate this screen.";
        } else {
          const auto rating = synth_rating(method, call.task->id, h);
          const auto subject = call.screenshot->caption.value_or("The screen");
          reply = synth_reply(rating, synth_explanation(rating, call.criterion, subject), h);
        }
        store.record(*call.request, reply);
        ++written;
      }
    }

    io::GroundTruth truth;
    truth.provenance = "synthetic expert ratings generated for the demo project";
    for (const std::string expert : {"expert-1", "expert-2"}) {
      for (auto method : {EvalMethod::NielsenHeuristics, EvalMethod::CognitiveWalkthrough}) {
        for (const auto& task : project.project.tasks) {
          for (const auto& criterion : project.project.criteria_for(method)) {
            const auto h = cell_hash(expert + "/" + task.id + "/" + criterion.id);
            Assessment a;
            a.task_id = task.id;
            a.criterion_id = criterion.id;
            a.rater = RaterId::expert(expert);
            a.rating = synth_rating(method, task.id, h);
            a.explanation = synth_explanation(a.rating, criterion, "The task flow");
            truth.assessments.push_back(std::move(a));
          }
        }
      }
    }
    io::write_text_file(project.root / "groundtruth.json", io::dump(io::to_json(truth)));
    std::cout << written << " fixtures, " << truth.assessments.size() << " expert assessments\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
