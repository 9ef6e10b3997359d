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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "uxrank/metrics/kappa.hpp"
#include "uxrank/metrics/topk.hpp"

namespace uxrank::metrics {

inline const std::vector<int> kDefaultKs = {3, 5, 10};

/// Kappa for one (model, expert, method). `kappa` is empty when the two
/// raters share no cells.
struct KappaCell {
  std::string model_id;
  std::string expert_id;
  EvalMethod method = EvalMethod::NielsenHeuristics;
  std::optional<KappaResult> kappa;
  friend bool operator==(const KappaCell&, const KappaCell&) = default;
};

struct TopKCell {
  std::string model_id;
  std::string expert_id;
  EvalMethod method = EvalMethod::NielsenHeuristics;
  int k = 3;
  int hit_rate = 0;
  double accuracy = 0.0;
  int n_tasks = 0;
  friend bool operator==(const TopKCell&, const TopKCell&) = default;
};

/// A hit-rate/accuracy pair averaged over experts (per model) or over models.
struct TopKSummary {
  std::string model_id;  ///< empty for the model-averaged rows
  EvalMethod method = EvalMethod::NielsenHeuristics;
  int k = 3;
  std::optional<double> hit_rate;
  std::optional<double> accuracy;
  friend bool operator==(const TopKSummary&, const TopKSummary&) = default;
};

struct KappaSummary {
  std::string expert_id;
  EvalMethod method = EvalMethod::NielsenHeuristics;
  std::optional<double> value;  ///< mean over models with a defined kappa
  friend bool operator==(const KappaSummary&, const KappaSummary&) = default;
};

struct AgreementReport {
  std::vector<int> ks;
  std::vector<EvalMethod> methods;
  std::vector<std::string> models;   ///< sorted
  std::vector<std::string> experts;  ///< sorted
  std::vector<KappaCell> kappa;                 ///< model x expert x method
  std::vector<KappaSummary> kappa_average;      ///< expert x method
  std::vector<TopKCell> topk;                   ///< model x expert x method x k (overlapping only)
  std::vector<TopKSummary> per_model;           ///< model x method x k, mean over experts
  std::vector<TopKSummary> average;             ///< method x k, mean over models
  std::vector<std::string> notes;

  friend bool operator==(const AgreementReport&, const AgreementReport&) = default;
};

/// Arithmetic mean of the present values, in order; nullopt when none are.
std::optional<double> average_row(std::span<const std::optional<double>> values);
double average_row(std::span<const double> values);

/// Compares every model with every expert independently.
///
/// Assessments still carrying screenshot ids are first collapsed with
/// ranking::aggregate_screenshots. For each (model, expert, method) only the
/// (task, criterion) cells rated by both are used: kappa over those cells
/// (weighted for grades, unweighted for verdicts), and hit rate / accuracy
/// at each k between the severity rankings both raters induce on those
/// cells. Pairings without shared cells are reported as missing.
AgreementReport benchmark(std::span<const Assessment> llm_assessments,
                          std::span<const Assessment> expert_assessments,
                          std::span<const int> ks);

}  // namespace uxrank::metrics
