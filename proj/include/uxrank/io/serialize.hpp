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
#include <string>

#include "uxrank/io/documents.hpp"
#include "uxrank/io/json_reader.hpp"
#include "uxrank/metrics/benchmark.hpp"

namespace uxrank::io {

// Every reader is strict: unknown fields raise SchemaError with their path.

json to_json(const Rating& rating);
Rating rating_from_json(const json& value, const std::string& path);

json to_json(const Assessment& assessment);
Assessment assessment_from_json(const json& value, const std::string& path);

json to_json(const ModelSpec& model);
ModelSpec model_from_json(const json& value, const std::string& path);

json to_json(const Criterion& criterion);
Criterion criterion_from_json(const json& value, const std::string& path);

json to_json(const UserTask& task);
UserTask task_from_json(const json& value, const std::string& path);

json to_json(const gateway::ProviderConfig& config);
gateway::ProviderConfig provider_from_json(const json& value, const std::string& path);

/// project.json content. `root` and `digest` are not part of the file.
json to_json(const ProjectFile& project);
ProjectFile project_from_json(const json& value);

json to_json(const EvaluationReport& report);
EvaluationReport report_from_json(const json& value);

json to_json(const GroundTruth& truth);
GroundTruth ground_truth_from_json(const json& value);

json to_json(const TriageDecision& decision);
TriageDecision triage_from_json(const json& value, const std::string& path = "$");

json to_json(const metrics::AgreementReport& report);
metrics::AgreementReport agreement_from_json(const json& value);

/// Pretty-printed JSON with a trailing newline.
std::string dump(const json& value);

EvaluationReport load_report(const std::filesystem::path& path);
GroundTruth load_ground_truth(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace uxrank::io
