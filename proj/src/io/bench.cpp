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

#include "uxrank/io/bench.hpp"

#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "uxrank/core/criteria.hpp"
#include "uxrank/io/serialize.hpp"

namespace uxrank::io {
namespace {

constexpr std::string_view kMissing = "—";

std::string number(const std::optional<double>& v) {
  if (!v) return std::string(kMissing);
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << *v;
  return s.str();
}

void check_ground_truth(std::span<const EvaluationReport> reports, const GroundTruth& truth) {
  if (truth.assessments.empty()) throw BenchError("ground truth contains no assessments");
  std::set<std::string> tasks;
  std::map<std::string, Criterion> criteria;
  for (const auto& report : reports) {
    for (const auto& t : report.manifest.tasks) tasks.insert(t.id);
    for (const auto& c : report.manifest.criteria) criteria.emplace(c.id, c);
  }
  for (auto method : {EvalMethod::NielsenHeuristics, EvalMethod::CognitiveWalkthrough}) {
    for (const auto& c : builtin_criteria(method)) criteria.emplace(c.id, c);
  }
  for (std::size_t i = 0; i < truth.assessments.size(); ++i) {
    const auto& a = truth.assessments[i];
    const auto where = "ground truth assessments[" + std::to_string(i) + "]: ";
    if (a.rater.is_model()) throw BenchError(where + "rater must be an expert");
    if (a.rater.id.empty()) throw BenchError(where + "rater id must not be empty");
    if (!tasks.contains(a.task_id)) throw BenchError(where + "unknown task '" + a.task_id + "'");
    const auto it = criteria.find(a.criterion_id);
    if (it == criteria.end()) throw BenchError(where + "unknown criterion '" + a.criterion_id + "'");
    if (it->second.rating_kind() != a.rating.kind()) {
      throw BenchError(where + a.rating.to_string() + " does not fit criterion '" + a.criterion_id + "'");
    }
  }
}

class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string render() const {
    std::vector<std::size_t> width(rows_.front().size(), 0);
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], display_width(row[i]));
    }
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& row) {
      out << "|";
      for (std::size_t i = 0; i < row.size(); ++i) {
        out << ' ' << row[i] << std::string(width[i] - display_width(row[i]), ' ') << " |";
      }
      out << "\n";
    };
    line(rows_.front());
    out << "|";
    for (auto w : width) out << std::string(w + 2, '-') << "|";
    out << "\n";
    for (std::size_t r = 1; r < rows_.size(); ++r) line(rows_[r]);
    return out.str();
  }

 private:
  // Counts UTF-8 code points so "—" pads like one column.
  static std::size_t display_width(const std::string& s) {
    std::size_t n = 0;
    for (unsigned char c : s) n += (c & 0xC0) != 0x80;
    return n;
  }
  std::vector<std::vector<std::string>> rows_;
};

std::string method_label(EvalMethod m) {
  return m == EvalMethod::NielsenHeuristics ? "Nielsen" : "Walkthrough";
}

std::optional<double> kappa_of(const metrics::AgreementReport& report, const std::string& model,
                               const std::string& expert, EvalMethod method) {
  for (const auto& c : report.kappa) {
    if (c.model_id == model && c.expert_id == expert && c.method == method && c.kappa) return c.kappa->value;
  }
  return std::nullopt;
}

const metrics::TopKSummary* summary_of(const std::vector<metrics::TopKSummary>& rows,
                                       const std::string& model, EvalMethod method, int k) {
  for (const auto& s : rows) {
    if (s.model_id == model && s.method == method && s.k == k) return &s;
  }
  return nullptr;
}

std::string topk_table(const metrics::AgreementReport& report, bool accuracy) {
  std::vector<std::string> header{"Model"};
  for (auto method : report.methods) {
    for (int k : report.ks) header.push_back(method_label(method) + " @" + std::to_string(k));
  }
  Table table(header);
  auto value = [&](const metrics::TopKSummary* s) {
    if (s == nullptr) return std::string(kMissing);
    return number(accuracy ? s->accuracy : s->hit_rate);
  };
  for (const auto& model : report.models) {
    std::vector<std::string> row{model};
    for (auto method : report.methods) {
      for (int k : report.ks) row.push_back(value(summary_of(report.per_model, model, method, k)));
    }
    table.add(std::move(row));
  }
  std::vector<std::string> avg{"Average LLM"};
  for (auto method : report.methods) {
    for (int k : report.ks) avg.push_back(value(summary_of(report.average, "", method, k)));
  }
  table.add(std::move(avg));
  return table.render();
}

}  // namespace

metrics::AgreementReport run_bench(std::span<const EvaluationReport> reports,
                                   const GroundTruth& truth, std::span<const int> ks) {
  if (reports.empty()) throw BenchError("no evaluation reports given");
  check_ground_truth(reports, truth);
  std::set<std::pair<std::string, EvalMethod>> seen;
  std::vector<Assessment> llm;
  for (const auto& report : reports) {
    for (const auto& m : report.models) {
      if (!seen.insert({m.id, report.method}).second) {
        throw BenchError("model '" + m.id + "' is rated with " + std::string(to_token(report.method)) +
                         " in more than one report");
      }
    }
    llm.insert(llm.end(), report.aggregated_assessments.begin(), report.aggregated_assessments.end());
  }
  if (llm.empty()) throw BenchError("the reports contain no assessments");
  try {
    return metrics::benchmark(llm, truth.assessments, ks);
  } catch (const std::exception& e) {
    throw BenchError(e.what());
  }
}

metrics::AgreementReport run_bench(const std::vector<std::filesystem::path>& report_paths,
                                   const std::filesystem::path& ground_truth_path,
                                   std::span<const int> ks) {
  std::vector<EvaluationReport> reports;
  for (const auto& p : report_paths) reports.push_back(load_report(p));
  return run_bench(reports, load_ground_truth(ground_truth_path), ks);
}

std::string render_tables(const metrics::AgreementReport& report) {
  std::ostringstream out;

  std::vector<std::string> header{"Model"};
  for (auto method : report.methods) {
    for (const auto& expert : report.experts) header.push_back(method_label(method) + " / " + expert);
  }
  Table kappa(header);
  for (const auto& model : report.models) {
    std::vector<std::string> row{model};
    for (auto method : report.methods) {
      for (const auto& expert : report.experts) row.push_back(number(kappa_of(report, model, expert, method)));
    }
    kappa.add(std::move(row));
  }
  std::vector<std::string> avg{"Average LLM"};
  for (auto method : report.methods) {
    for (const auto& expert : report.experts) {
      std::optional<double> v;
      for (const auto& s : report.kappa_average) {
        if (s.expert_id == expert && s.method == method) v = s.value;
      }
      avg.push_back(number(v));
    }
  }
  kappa.add(std::move(avg));

  out << "Cohen's kappa (quadratic weights for Nielsen grades)\n\n" << kappa.render() << "\n";
  out << "Hit rate @k\n\n" << topk_table(report, false) << "\n";
  out << "Accuracy @k\n\n" << topk_table(report, true);
  if (!report.notes.empty()) {
    out << "\n";
    for (const auto& note : report.notes) out << "Note: " << note << "\n";
  }
  return out.str();
}

}  // namespace uxrank::io
