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

#include <doctest.h>

#include <vector>

#include "uxrank/metrics/topk.hpp"

using namespace uxrank;
using namespace uxrank::metrics;
using ranking::SeverityRanking;
using ranking::SeverityScore;

namespace {

SeverityRanking ranked(const std::vector<std::pair<std::string, double>>& scores) {
  std::vector<SeverityScore> s;
  for (const auto& [id, v] : scores) s.push_back({id, EvalMethod::NielsenHeuristics, v, 1});
  return ranking::rank_tasks(s);
}

}  // namespace

TEST_CASE("hit rate and accuracy") {
  const auto llm = ranked({{"a", 5}, {"b", 4}, {"c", 3}, {"d", 2}, {"e", 1}});
  const auto expert = ranked({{"a", 1}, {"b", 2}, {"c", 3}, {"d", 4}, {"e", 5}});
  CHECK(hit_rate_at_k(llm, expert, 1) == 0);
  CHECK(accuracy_at_k(llm, expert, 1) == 0.0);
  CHECK(hit_rate_at_k(llm, expert, 3) == 1);
  CHECK(accuracy_at_k(llm, expert, 3) == doctest::Approx(1.0 / 3.0));
  CHECK(accuracy_at_k(llm, expert, 5) == 1.0);
  CHECK(accuracy_at_k(llm, llm, 2) == 1.0);
}

TEST_CASE("k beyond the task count uses every task but still divides by k") {
  const auto r = ranked({{"a", 2}, {"b", 1}});
  CHECK(hit_rate_at_k(r, r, 10) == 1);
  CHECK(accuracy_at_k(r, r, 10) == doctest::Approx(0.2));
}

TEST_CASE("rankings must share their universe") {
  const auto a = ranked({{"a", 1}, {"b", 2}});
  const auto b = ranked({{"a", 1}, {"c", 2}});
  CHECK_THROWS_AS(hit_rate_at_k(a, b, 1), MetricsError);
  CHECK_THROWS_AS(accuracy_at_k(a, a, 0), std::exception);
}
