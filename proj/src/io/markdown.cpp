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

#include "uxrank/io/markdown.hpp"

#include <iomanip>
#include <sstream>

namespace uxrank::io {
namespace {

std::string cell(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '|') {
      out += "\\|";
    } else if (c == '\n') {
      out += "<br>";
    } else if (c != '\r') {
      out += c;
    }
  }
  return out;
}

std::string fixed3(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << v;
  return s.str();
}

const UserTask* find_task(const EvaluationReport& report, const std::string& id) {
  for (const auto& t : report.manifest.tasks) {
    if (t.id == id) return &t;
  }
  return nullptr;
}

const Assessment* find_cell(const EvaluationReport& report, const std::string& model,
                            const std::string& task, const std::string& criterion) {
  for (const auto& a : report.aggregated_assessments) {
    if (a.rater.id == model && a.task_id == task && a.criterion_id == criterion) return &a;
  }
  return nullptr;
}

void render_task(std::ostringstream& md, const EvaluationReport& report, const RaterResult& result,
                 const ranking::RankEntry& entry) {
  const auto* task = find_task(report, entry.task_id);
  const std::string title = task != nullptr && !task->title.empty() ? task->title : entry.task_id;
  md << "### Rank " << entry.rank << ": " << title << " (`" << entry.task_id << "`)\n\n";

  int count = 0;
  for (const auto& s : result.scores) {
    if (s.task_id == entry.task_id) count = s.criteria_count;
  }
  md << "- Severity score: " << fixed3(entry.score) << " ("
     << (report.method == EvalMethod::NielsenHeuristics ? "mean grade" : "share of failed criteria")
     << " over " << count << " criteria)\n";
  if (task != nullptr) {
    md << "- Screenshots:";
    for (std::size_t i = 0; i < task->screenshots.size(); ++i) {
      md << (i == 0 ? " " : ", ") << '`' << task->screenshots[i] << '`';
    }
    md << "\n";
    if (!task->description.empty()) md << "- Task: " << cell(task->description) << "\n";
  }
  md << "\n| Criterion | Rating | Explanation |\n|---|---|---|\n";
  for (const auto& criterion : report.manifest.criteria) {
    const auto* a = find_cell(report, result.rater.id, entry.task_id, criterion.id);
    if (a == nullptr) continue;
    md << "| " << cell(criterion.title) << " (`" << criterion.id << "`) | " << a->rating.to_string()
       << " | " << cell(a->explanation) << " |\n";
  }
  md << "\n";
}

}  // namespace

std::string render_markdown(const EvaluationReport& report) {
  std::ostringstream md;
  md << "# Usability evaluation report\n\n";
  md << "- Method: " << display_name(report.method) << "\n";
  md << "- Template: `" << report.template_name << "`\n";
  md << "- Project digest: `" << report.project_digest << "`\n";
  md << "- Generated: " << report.timestamp << "\n";
  md << "- Models:";
  for (std::size_t i = 0; i < report.models.size(); ++i) {
    const auto& m = report.models[i];
    md << (i == 0 ? " " : ", ") << '`' << m.id << '`';
    if (!m.version.empty()) md << " (" << m.version << ")";
  }
  md << "\n\n";

  for (const auto& result : report.results) {
    md << "## Model `" << result.rater.id << "`\n\n";
    for (const auto& entry : result.ranking.entries) render_task(md, report, result, entry);
  }

  if (!report.warnings.empty()) {
    md << "## Warnings\n\n";
    for (const auto& w : report.warnings) md << "- " << cell(describe(w)) << "\n";
    md << "\n";
  }
  auto out = md.str();
  while (out.size() >= 2 && out.ends_with("\n\n")) out.pop_back();
  return out;
}

}  // namespace uxrank::io
