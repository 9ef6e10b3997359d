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

#include "uxrank/metrics/benchmark.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace uxrank::metrics {
namespace {

using CellKey = std::pair<std::string, std::string>;  // (task, criterion)
using RaterCells = std::map<CellKey, Assessment>;

// rater id -> method -> cells, with screenshots already collapsed.
using CellIndex = std::map<std::string, std::map<EvalMethod, RaterCells>>;

CellIndex index_cells(std::span<const Assessment> assessments) {
  std::map<std::tuple<std::string, std::string, std::string>, std::vector<Assessment>> groups;
  for (const auto& a : assessments) {
    groups[{a.rater.id, a.task_id, a.criterion_id}].push_back(a);
  }
  CellIndex index;
  for (const auto& [key, group] : groups) {
    auto merged = ranking::aggregate_screenshots(group);
    const auto method = method_for(merged.rating.kind());
    index[std::get<0>(key)][method].emplace(CellKey{merged.task_id, merged.criterion_id},
                                            std::move(merged));
  }
  return index;
}

ranking::SeverityRanking rank_cells(const RaterCells& cells, const std::vector<CellKey>& shared) {
  std::map<std::string, std::vector<Assessment>> per_task;
  for (const auto& key : shared) per_task[key.first].push_back(cells.at(key));
  std::vector<ranking::SeverityScore> scores;
  for (const auto& [task, items] : per_task) {
    scores.push_back(ranking::severity_score(task, items));
  }
  return ranking::rank_tasks(scores);
}

}  // namespace

std::optional<double> average_row(std::span<const std::optional<double>> values) {
  double sum = 0.0;
  int count = 0;
  for (const auto& v : values) {
    if (v) {
      sum += *v;
      ++count;
    }
  }
  if (count == 0) return std::nullopt;
  return sum / count;
}

double average_row(std::span<const double> values) {
  if (values.empty()) throw MetricsError(MetricsError::Kind::EmptyInput, "empty average row");
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

AgreementReport benchmark(std::span<const Assessment> llm_assessments,
                          std::span<const Assessment> expert_assessments,
                          std::span<const int> ks) {
  if (ks.empty()) throw MetricsError(MetricsError::Kind::InvalidArgument, "no k values");
  for (int k : ks) {
    if (k < 1) throw MetricsError(MetricsError::Kind::InvalidArgument, "k must be >= 1");
  }
  if (expert_assessments.empty()) {
    throw MetricsError(MetricsError::Kind::EmptyInput, "no expert assessments");
  }

  const auto llm = index_cells(llm_assessments);
  const auto experts = index_cells(expert_assessments);

  AgreementReport report;
  report.ks.assign(ks.begin(), ks.end());
  std::set<EvalMethod> methods;
  for (const auto& [model, by_method] : llm) {
    report.models.push_back(model);
    for (const auto& [method, cells] : by_method) methods.insert(method);
  }
  for (const auto& [expert, by_method] : experts) report.experts.push_back(expert);
  report.methods.assign(methods.begin(), methods.end());

  for (const auto method : report.methods) {
    for (const auto& model : report.models) {
      for (const auto& expert : report.experts) {
        static const RaterCells kNone;
        const auto& model_methods = llm.at(model);
        const auto& expert_methods = experts.at(expert);
        const auto& a = model_methods.contains(method) ? model_methods.at(method) : kNone;
        const auto& b = expert_methods.contains(method) ? expert_methods.at(method) : kNone;

        std::vector<CellKey> shared;
        for (const auto& [key, _] : a) {
          if (b.contains(key)) shared.push_back(key);
        }

        KappaCell cell{model, expert, method, std::nullopt};
        if (shared.empty()) {
          report.notes.push_back("no shared cells for model '" + model + "' and expert '" +
                                 expert + "' (" + std::string(to_token(method)) + ")");
          report.kappa.push_back(std::move(cell));
          continue;
        }
        RatingPairs pairs;
        pairs.scheme = rating_kind_for(method);
        for (const auto& key : shared) pairs.pairs.emplace_back(a.at(key).rating, b.at(key).rating);
        cell.kappa = method == EvalMethod::NielsenHeuristics ? weighted_kappa(pairs)
                                                             : cohen_kappa(pairs);
        report.kappa.push_back(std::move(cell));

        const auto llm_ranking = rank_cells(a, shared);
        const auto expert_ranking = rank_cells(b, shared);
        for (int k : report.ks) {
          report.topk.push_back({model, expert, method, k,
                                 hit_rate_at_k(llm_ranking, expert_ranking, k),
                                 accuracy_at_k(llm_ranking, expert_ranking, k),
                                 static_cast<int>(llm_ranking.entries.size())});
        }
      }
    }
  }

  for (const auto method : report.methods) {
    for (const auto& expert : report.experts) {
      std::vector<std::optional<double>> values;
      for (const auto& cell : report.kappa) {
        if (cell.method == method && cell.expert_id == expert && cell.kappa) {
          values.push_back(cell.kappa->value);
        }
      }
      report.kappa_average.push_back({expert, method, average_row(values)});
    }
  }

  for (const auto method : report.methods) {
    for (int k : report.ks) {
      std::vector<std::optional<double>> model_hits;
      std::vector<std::optional<double>> model_accuracy;
      for (const auto& model : report.models) {
        std::vector<std::optional<double>> hits;
        std::vector<std::optional<double>> accuracy;
        for (const auto& cell : report.topk) {
          if (cell.method == method && cell.k == k && cell.model_id == model) {
            hits.emplace_back(static_cast<double>(cell.hit_rate));
            accuracy.emplace_back(cell.accuracy);
          }
        }
        TopKSummary summary{model, method, k, average_row(hits), average_row(accuracy)};
        model_hits.push_back(summary.hit_rate);
        model_accuracy.push_back(summary.accuracy);
        report.per_model.push_back(std::move(summary));
      }
      report.average.push_back(
          {std::string(), method, k, average_row(model_hits), average_row(model_accuracy)});
    }
  }

  if (report.experts.size() > 1) {
    report.notes.push_back(
        "hit rate and accuracy per model are the mean of the per-expert values");
  }
  return report;
}

}  // namespace uxrank::metrics
