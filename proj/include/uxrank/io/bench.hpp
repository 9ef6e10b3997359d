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
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "uxrank/io/documents.hpp"
#include "uxrank/metrics/benchmark.hpp"

namespace uxrank::io {

class BenchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Compares the aggregated model assessments of the reports with the expert
/// ground truth. Expert assessments must reference tasks and criteria of the
/// reports' manifests with a matching rating scheme.
///
/// Throws BenchError when the ground truth is empty or inconsistent, or when
/// two reports rate the same (model, method).
metrics::AgreementReport run_bench(std::span<const EvaluationReport> reports,
                                   const GroundTruth& truth, std::span<const int> ks);

metrics::AgreementReport run_bench(const std::vector<std::filesystem::path>& report_paths,
                                   const std::filesystem::path& ground_truth_path,
                                   std::span<const int> ks);

/// Plain-text tables: kappa per model and expert, then hit rate and accuracy
/// per model and k, each with a closing average row. Missing values print
/// as "—".
std::string render_tables(const metrics::AgreementReport& report);

}  // namespace uxrank::io
