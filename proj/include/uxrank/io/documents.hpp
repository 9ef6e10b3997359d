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

#pragma once

// File-level documents: project, evaluation report, ground truth, triage.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "uxrank/core/model.hpp"
#include "uxrank/gateway/gateway.hpp"
#include "uxrank/ranking/severity.hpp"

namespace uxrank::io {

inline constexpr std::string_view kReportFormat = "uxrank.evaluation-report/1";
inline constexpr std::string_view kBenchFormat = "uxrank.agreement-report/1";

/// A loaded `project.json` plus where it lives.
struct ProjectFile {
  EvaluationProject project;
  std::vector<gateway::ProviderConfig> providers;
  /// Optional template file, relative to the project directory.
  std::optional<std::string> template_path;
  /// Directory containing project.json; screenshot paths resolve against it.
  std::filesystem::path root;
  /// SHA-256 of the project.json bytes.
  std::string digest;

  /// Declared provider with this key, else the built-in one.
  std::optional<gateway::ProviderConfig> provider(std::string_view key) const;
};

struct ReportWarning {
  std::optional<std::string> task_id;
  std::optional<std::string> screenshot_id;
  std::optional<std::string> criterion_id;
  std::optional<std::string> model_id;
  std::string message;
  friend bool operator==(const ReportWarning&, const ReportWarning&) = default;
};

std::string describe(const ReportWarning& warning);

/// Tasks and criteria the report refers to, so it can be read on its own.
struct ReportManifest {
  std::vector<UserTask> tasks;
  std::vector<Criterion> criteria;
  friend bool operator==(const ReportManifest&, const ReportManifest&) = default;
};

/// Scores and ranking of one rater.
struct RaterResult {
  RaterId rater;
  std::vector<ranking::SeverityScore> scores;
  ranking::SeverityRanking ranking;
  friend bool operator==(const RaterResult&, const RaterResult&) = default;
};

struct EvaluationReport {
  std::string project_digest;
  std::string timestamp;
  EvalMethod method = EvalMethod::NielsenHeuristics;
  std::string template_name;
  std::vector<ModelSpec> models;
  ReportManifest manifest;
  /// Per screenshot, ordered by (task, screenshot, criterion, model).
  std::vector<Assessment> raw_assessments;
  /// Per task, ordered by (model, task, criterion).
  std::vector<Assessment> aggregated_assessments;
  std::vector<RaterResult> results;
  std::vector<ReportWarning> warnings;

  friend bool operator==(const EvaluationReport&, const EvaluationReport&) = default;
};

struct GroundTruth {
  std::string provenance;
  std::vector<Assessment> assessments;
  friend bool operator==(const GroundTruth&, const GroundTruth&) = default;
};

enum class TriageVerdict { Accepted, Rejected, Deferred };

std::string_view to_token(TriageVerdict verdict);
std::optional<TriageVerdict> triage_verdict_from_token(std::string_view token);

struct TriageDecision {
  std::string task_id;
  std::optional<std::string> criterion_id;  ///< task-level when absent
  TriageVerdict decision = TriageVerdict::Deferred;
  std::string note;
  std::string decided_at;
  friend bool operator==(const TriageDecision&, const TriageDecision&) = default;
};

}  // namespace uxrank::io
