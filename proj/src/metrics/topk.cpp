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

#include "uxrank/metrics/topk.hpp"

#include <algorithm>
#include <set>

namespace uxrank::metrics {
namespace {

std::set<std::string> universe(const ranking::SeverityRanking& r) {
  std::set<std::string> out;
  for (const auto& e : r.entries) out.insert(e.task_id);
  return out;
}

int overlap(const ranking::SeverityRanking& llm, const ranking::SeverityRanking& expert, int k) {
  if (k < 1) throw MetricsError(MetricsError::Kind::InvalidArgument, "k must be >= 1");
  if (universe(llm) != universe(expert)) {
    throw MetricsError(MetricsError::Kind::UniverseMismatch,
                       "rankings cover different task sets");
  }
  auto a = ranking::top_k(llm, k);
  auto b = ranking::top_k(expert, k);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<std::string> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return static_cast<int>(common.size());
}

}  // namespace

int hit_rate_at_k(const ranking::SeverityRanking& llm, const ranking::SeverityRanking& expert,
                  int k) {
  return overlap(llm, expert, k) > 0 ? 1 : 0;
}

double accuracy_at_k(const ranking::SeverityRanking& llm, const ranking::SeverityRanking& expert,
                     int k) {
  return static_cast<double>(overlap(llm, expert, k)) / k;
}

}  // namespace uxrank::metrics
