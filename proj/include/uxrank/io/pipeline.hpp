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

#include <filesystem>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "uxrank/gateway/gateway.hpp"
#include "uxrank/io/documents.hpp"

namespace uxrank::io {

enum class ProviderMode { Live, Replay };

struct EvaluationOptions {
  EvalMethod method = EvalMethod::NielsenHeuristics;
  /// Model ids to run; empty means every model of the project.
  std::vector<std::string> models;
  ProviderMode mode = ProviderMode::Replay;
  /// Replay store; defaults to `<project>/fixtures`.
  std::optional<std::filesystem::path> fixtures_dir;
  /// Live mode only; defaults to HttplibTransport.
  std::shared_ptr<gateway::HttpTransport> transport;
  /// Live mode: record every reply as a replay fixture here.
  std::shared_ptr<gateway::FixtureStore> record_into;
  std::optional<std::filesystem::path> audit_dir;
  /// Worker threads issuing gateway calls.
  int parallelism = 4;
  /// Report timestamp; defaults to the current UTC time.
  std::optional<std::string> timestamp;
};

class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One (task, screenshot, criterion, model) cell of an evaluation run.
struct PlannedCall {
  const UserTask* task = nullptr;
  const Screenshot* screenshot = nullptr;
  Criterion criterion;
  const ModelSpec* model = nullptr;
  gateway::ProviderConfig provider;
  /// Empty when the prompt could not be built; `error` says why.
  std::optional<gateway::ChatRequest> request;
  std::string error;
};

/// Every cell in (task, screenshot, criterion, model) order. Throws
/// EvaluationError for an unknown model id or a method without criteria.
std::vector<PlannedCall> plan_calls(const ProjectFile& project, EvalMethod method,
                                    const std::vector<std::string>& models);

/// Prompts, parses, aggregates and ranks. Failed cells become report warnings;
/// throws EvaluationError only when no assessment succeeds.
EvaluationReport run_evaluation(const ProjectFile& project, const EvaluationOptions& options);

/// Same, against an explicit provider (the mode and transport options are
/// ignored).
EvaluationReport run_evaluation(const ProjectFile& project, const EvaluationOptions& options,
                                std::shared_ptr<gateway::ChatProvider> provider);

/// Recomputes scores and rankings from a report's aggregated assessments.
std::vector<RaterResult> recompute_results(const EvaluationReport& report);

}  // namespace uxrank::io
