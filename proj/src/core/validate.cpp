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

#include "uxrank/core/validate.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "uxrank/core/criteria.hpp"
#include "uxrank/core/image.hpp"

namespace uxrank {
namespace {

std::string at(const std::string& array, std::size_t i) {
  return array + "[" + std::to_string(i) + "]";
}

class Collector {
 public:
  void add(std::string path, std::string message) {
    findings_.push_back({std::move(path), std::move(message)});
  }
  std::vector<Finding> take() { return std::move(findings_); }

 private:
  std::vector<Finding> findings_;
};

template <typename T>
void check_ids(const std::vector<T>& items, const std::string& array, Collector& out) {
  std::set<std::string> seen;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& id = items[i].id;
    if (id.empty()) {
      out.add(at(array, i) + ".id", "id must not be empty");
    } else if (!seen.insert(id).second) {
      out.add(at(array, i) + ".id", "duplicate id '" + id + "'");
    }
  }
}

// Returns false when the file cannot be read at all.
bool check_screenshot_file(const Screenshot& shot, const std::filesystem::path& root,
                           const std::string& path, Collector& out) {
  const std::filesystem::path file = root / shot.path;
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    out.add(path + ".path", "screenshot file not found: " + file.string());
    return false;
  }
  std::ostringstream bytes;
  bytes << in.rdbuf();
  const auto info = inspect_image(bytes.str());
  if (!info) {
    out.add(path + ".path", "file does not decode as an image: " + file.string());
  } else if (info->media_type != shot.media_type) {
    out.add(path + ".media_type",
            "declared " + std::string(to_token(shot.media_type)) + " but file is " +
                std::string(to_token(info->media_type)));
  }
  return true;
}

}  // namespace

std::string to_string(const Finding& finding) {
  return finding.path + ": " + finding.message;
}

std::vector<Finding> validate_project(const EvaluationProject& project,
                                      const std::filesystem::path& root) {
  Collector out;

  if (project.application.description.empty()) {
    out.add("application.description", "application description must not be empty");
  }

  check_ids(project.personas, "personas", out);
  for (std::size_t i = 0; i < project.personas.size(); ++i) {
    if (project.personas[i].role_description.empty()) {
      out.add(at("personas", i) + ".role_description", "role description must not be empty");
    }
  }

  check_ids(project.screenshots, "screenshots", out);
  std::set<std::string> missing_files;
  for (std::size_t i = 0; i < project.screenshots.size(); ++i) {
    if (!check_screenshot_file(project.screenshots[i], root, at("screenshots", i), out)) {
      missing_files.insert(project.screenshots[i].id);
    }
  }

  if (project.tasks.empty()) out.add("tasks", "at least one task is required");
  check_ids(project.tasks, "tasks", out);
  for (std::size_t i = 0; i < project.tasks.size(); ++i) {
    const auto& task = project.tasks[i];
    const auto path = at("tasks", i);
    if (project.find_persona(task.persona_id) == nullptr) {
      out.add(path + ".persona_id", "unknown persona '" + task.persona_id + "' in task '" + task.id + "'");
    }
    if (task.screenshots.empty()) {
      out.add(path + ".screenshots", "task '" + task.id + "' has no screenshots");
    }
    for (std::size_t j = 0; j < task.screenshots.size(); ++j) {
      const auto& sid = task.screenshots[j];
      if (project.find_screenshot(sid) == nullptr) {
        out.add(at(path + ".screenshots", j), "unknown screenshot '" + sid + "' in task '" + task.id + "'");
      } else if (missing_files.contains(sid)) {
        out.add(at(path + ".screenshots", j),
                "task '" + task.id + "' uses screenshot '" + sid + "' whose file is missing");
      }
    }
  }

  check_ids(project.custom_criteria, "custom_criteria", out);
  for (std::size_t i = 0; i < project.custom_criteria.size(); ++i) {
    const auto& c = project.custom_criteria[i];
    const auto path = at("custom_criteria", i);
    for (auto method : {EvalMethod::NielsenHeuristics, EvalMethod::CognitiveWalkthrough}) {
      for (const auto& builtin : builtin_criteria(method)) {
        if (builtin.id == c.id) out.add(path + ".id", "id '" + c.id + "' collides with a built-in criterion");
      }
    }
    if (c.title.empty()) out.add(path + ".title", "title must not be empty");
    if (c.prompt_text.empty()) out.add(path + ".prompt_text", "prompt text must not be empty");
  }
  std::set<std::string> selected;
  for (std::size_t i = 0; i < project.criteria.size(); ++i) {
    const auto& id = project.criteria[i];
    if (!project.find_criterion(id)) {
      out.add(at("criteria", i), "unknown criterion '" + id + "'");
    } else if (!selected.insert(id).second) {
      out.add(at("criteria", i), "criterion '" + id + "' selected twice");
    }
  }

  if (project.models.empty()) out.add("models", "at least one model is required");
  check_ids(project.models, "models", out);
  for (std::size_t i = 0; i < project.models.size(); ++i) {
    const auto& m = project.models[i];
    const auto path = at("models", i);
    if (m.provider.empty()) out.add(path + ".provider", "provider must not be empty");
    if (m.temperature) {
      if (!m.supports_temperature) {
        out.add(path + ".temperature", "model '" + m.id + "' does not support a temperature");
      } else if (!(*m.temperature >= 0.0 && *m.temperature <= 2.0)) {
        out.add(path + ".temperature", "temperature must lie in [0, 2]");
      }
    }
  }

  return out.take();
}

std::vector<Finding> validate_assessments(const EvaluationProject& project,
                                          std::span<const Assessment> assessments,
                                          const std::string& path_prefix) {
  Collector out;
  for (std::size_t i = 0; i < assessments.size(); ++i) {
    const auto& a = assessments[i];
    const auto path = at(path_prefix, i);
    const auto* task = project.find_task(a.task_id);
    if (task == nullptr) {
      out.add(path + ".task_id", "unknown task '" + a.task_id + "'");
    }
    if (a.screenshot_id && task != nullptr) {
      bool owned = false;
      for (const auto& sid : task->screenshots) owned = owned || sid == *a.screenshot_id;
      if (!owned) {
        out.add(path + ".screenshot_id",
                "screenshot '" + *a.screenshot_id + "' does not belong to task '" + a.task_id + "'");
      }
    }
    const auto criterion = project.find_criterion(a.criterion_id);
    if (!criterion) {
      out.add(path + ".criterion_id", "unknown criterion '" + a.criterion_id + "'");
    } else if (criterion->rating_kind() != a.rating.kind()) {
      out.add(path + ".rating", a.rating.to_string() + " does not match the rating scheme of " +
                                    std::string(display_name(criterion->method)) + " criterion '" +
                                    a.criterion_id + "'");
    }
    if (a.rater.id.empty()) out.add(path + ".rater", "rater id must not be empty");
    if (a.rater.is_model() && a.explanation.empty()) {
      out.add(path + ".explanation", "model assessments require an explanation");
    }
  }
  return out.take();
}

}  // namespace uxrank
