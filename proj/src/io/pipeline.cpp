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

#include "uxrank/io/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "uxrank/io/project_loader.hpp"
#include "uxrank/parser/response_parser.hpp"
#include "uxrank/prompt/builder.hpp"
#include "uxrank/ranking/severity.hpp"
#include "uxrank/util/log.hpp"
#include "uxrank/util/strings.hpp"

namespace uxrank::io {
namespace {

struct Outcome {
  std::optional<Assessment> assessment;
  std::vector<ReportWarning> warnings;
};

ReportWarning warning_for(const PlannedCall& call, std::string message) {
  return {call.task->id, call.screenshot->id, call.criterion.id, call.model->id, std::move(message)};
}

std::vector<const ModelSpec*> select_models(const EvaluationProject& project,
                                            const std::vector<std::string>& ids) {
  std::vector<const ModelSpec*> out;
  for (const auto& id : ids) {
    if (project.find_model(id) == nullptr) throw EvaluationError("unknown model '" + id + "'");
  }
  for (const auto& model : project.models) {
    if (ids.empty() || std::find(ids.begin(), ids.end(), model.id) != ids.end()) {
      out.push_back(&model);
    }
  }
  return out;
}

Outcome execute(const PlannedCall& call, EvalMethod method, gateway::Gateway& gw) {
  Outcome out;
  if (!call.request) {
    out.warnings.push_back(warning_for(call, call.error));
    return out;
  }
  const auto key = call.request->key();
  try {
    const auto response = gw.complete(*call.request, call.provider);
    auto parsed = parser::parse_assessment(response.text, method);
    Assessment a;
    a.task_id = call.task->id;
    a.screenshot_id = call.screenshot->id;
    a.criterion_id = call.criterion.id;
    a.rater = RaterId::model(call.model->id);
    a.rating = parsed.rating;
    a.explanation = std::move(parsed.explanation);
    a.raw_response_id = key;
    out.assessment = std::move(a);
    for (auto& w : parsed.warnings) out.warnings.push_back(warning_for(call, std::move(w)));
  } catch (const gateway::GatewayError& e) {
    out.warnings.push_back(warning_for(
        call, "gateway error (" + std::string(gateway::to_string(e.kind())) + "): " + e.what()));
  } catch (const parser::ParseError& e) {
    out.warnings.push_back(warning_for(
        call, "response " + key + " rejected (" + std::string(parser::to_string(e.kind())) +
                  "): " + e.what()));
  }
  return out;
}

std::vector<Outcome> execute_all(const std::vector<PlannedCall>& plan, EvalMethod method,
                                 gateway::Gateway& gw, int parallelism) {
  std::vector<Outcome> outcomes(plan.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (auto i = next++; i < plan.size(); i = next++) outcomes[i] = execute(plan[i], method, gw);
  };
  const auto n = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(parallelism, 1)), 1,
                                         std::max<std::size_t>(plan.size(), 1));
  std::vector<std::jthread> threads;
  for (std::size_t t = 1; t < n; ++t) threads.emplace_back(worker);
  worker();
  return outcomes;
}

RaterResult score_rater(const RaterId& rater, const std::vector<UserTask>& tasks,
                        const std::vector<Assessment>& aggregated) {
  RaterResult result{rater, {}, {}};
  for (const auto& task : tasks) {
    std::vector<Assessment> cells;
    for (const auto& a : aggregated) {
      if (a.rater == rater && a.task_id == task.id) cells.push_back(a);
    }
    if (!cells.empty()) result.scores.push_back(ranking::severity_score(task.id, cells));
  }
  if (!result.scores.empty()) result.ranking = ranking::rank_tasks(result.scores);
  return result;
}

}  // namespace

std::vector<PlannedCall> plan_calls(const ProjectFile& file, EvalMethod method,
                                    const std::vector<std::string>& model_ids) {
  const auto& project = file.project;
  const auto models = select_models(project, model_ids);
  const auto criteria = project.criteria_for(method);
  if (criteria.empty()) {
    throw EvaluationError("the project selects no " + std::string(display_name(method)) + " criteria");
  }
  const auto tmpl = project_template(file);

  std::vector<PlannedCall> plan;
  for (const auto& task : project.tasks) {
    const auto* persona = project.find_persona(task.persona_id);
    for (const auto& sid : task.screenshots) {
      const auto* shot = project.find_screenshot(sid);
      for (const auto& criterion : criteria) {
        std::optional<prompt::PromptBundle> bundle;
        std::string error;
        try {
          bundle = prompt::build_prompt(tmpl, project.application, *persona, task, *shot,
                                        criterion, file.root);
        } catch (const prompt::PromptError& e) {
          error = std::string("prompt not built: ") + e.what();
        }
        for (const auto* model : models) {
          auto provider = file.provider(model->provider);
          if (!provider) throw EvaluationError("unknown provider '" + model->provider + "'");
          PlannedCall call{&task, shot, criterion, model, *provider, std::nullopt, error};
          if (bundle) call.request = gateway::make_request(*model, *bundle);
          plan.push_back(std::move(call));
        }
      }
    }
  }
  return plan;
}

EvaluationReport run_evaluation(const ProjectFile& file, const EvaluationOptions& options) {
  std::shared_ptr<gateway::ChatProvider> provider;
  if (options.mode == ProviderMode::Replay) {
    const auto dir = options.fixtures_dir.value_or(file.root / "fixtures");
    if (!std::filesystem::is_directory(dir)) {
      throw EvaluationError("replay fixtures not found: " + dir.string());
    }
    provider = std::make_shared<gateway::ReplayProvider>(std::make_shared<gateway::FixtureStore>(dir));
  } else {
    auto transport = options.transport ? options.transport
                                       : std::make_shared<gateway::HttplibTransport>();
    provider = std::make_shared<gateway::LiveProvider>(std::move(transport));
  }
  return run_evaluation(file, options, std::move(provider));
}

EvaluationReport run_evaluation(const ProjectFile& file, const EvaluationOptions& options,
                                std::shared_ptr<gateway::ChatProvider> provider) {
  const auto& project = file.project;
  const auto plan = plan_calls(file, options.method, options.models);

  gateway::Gateway gw(std::move(provider), {options.audit_dir, options.record_into});
  auto outcomes = execute_all(plan, options.method, gw, options.parallelism);

  EvaluationReport report;
  report.project_digest = file.digest;
  report.timestamp = options.timestamp.value_or(util::utc_timestamp());
  report.method = options.method;
  report.template_name = project_template(file).name;
  for (const auto* model : select_models(project, options.models)) report.models.push_back(*model);
  report.manifest.tasks = project.tasks;
  report.manifest.criteria = project.criteria_for(options.method);

  for (auto& outcome : outcomes) {
    if (outcome.assessment) report.raw_assessments.push_back(std::move(*outcome.assessment));
    for (auto& w : outcome.warnings) report.warnings.push_back(std::move(w));
  }
  if (report.raw_assessments.empty()) {
    std::string message = "no assessment succeeded";
    if (!report.warnings.empty()) message += "; first failure: " + describe(report.warnings.front());
    throw EvaluationError(message);
  }

  for (const auto& model : report.models) {
    for (const auto& task : project.tasks) {
      for (const auto& criterion : report.manifest.criteria) {
        std::vector<Assessment> cell;
        for (const auto& a : report.raw_assessments) {
          if (a.rater.id == model.id && a.task_id == task.id && a.criterion_id == criterion.id) {
            cell.push_back(a);
          }
        }
        if (!cell.empty()) report.aggregated_assessments.push_back(ranking::aggregate_screenshots(cell));
      }
    }
  }
  report.results = recompute_results(report);
  for (const auto& result : report.results) {
    if (result.scores.size() < project.tasks.size()) {
      for (const auto& task : project.tasks) {
        const bool scored = std::any_of(result.scores.begin(), result.scores.end(),
                                        [&](const auto& s) { return s.task_id == task.id; });
        if (!scored) {
          report.warnings.push_back({task.id, std::nullopt, std::nullopt, result.rater.id,
                                     "task has no assessments and is left out of the ranking"});
        }
      }
    }
  }
  for (const auto& w : report.warnings) log::warn(describe(w));
  return report;
}

std::vector<RaterResult> recompute_results(const EvaluationReport& report) {
  std::vector<RaterResult> results;
  for (const auto& model : report.models) {
    auto result = score_rater(RaterId::model(model.id), report.manifest.tasks,
                              report.aggregated_assessments);
    result.ranking.method = report.method;
    if (!result.scores.empty()) results.push_back(std::move(result));
  }
  return results;
}

}  // namespace uxrank::io
