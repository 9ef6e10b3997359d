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

#include "uxrank/ranking/severity.hpp"

#include <algorithm>
#include <set>

namespace uxrank::ranking {
namespace {

using Kind = RankingError::Kind;

void require_uniform_kind(std::span<const Rating> ratings) {
  for (const auto& r : ratings) {
    if (r.kind() != ratings.front().kind()) {
      throw RankingError(Kind::MixedScheme, "cannot combine " + ratings.front().to_string() +
                                                " with " + r.to_string());
    }
  }
}

std::vector<Rating> ratings_of(std::span<const Assessment> assessments) {
  std::vector<Rating> out;
  out.reserve(assessments.size());
  for (const auto& a : assessments) out.push_back(a.rating);
  return out;
}

}  // namespace

Assessment aggregate_screenshots(std::span<const Assessment> assessments) {
  if (assessments.empty()) throw RankingError(Kind::EmptyInput, "no assessments to aggregate");
  const auto& first = assessments.front();
  for (const auto& a : assessments) {
    if (a.task_id != first.task_id || a.criterion_id != first.criterion_id ||
        a.rater != first.rater) {
      throw RankingError(Kind::MixedCell,
                         "screenshot aggregation needs one (task, criterion, rater); got " +
                             a.task_id + "/" + a.criterion_id + "/" + a.rater.label() + " with " +
                             first.task_id + "/" + first.criterion_id + "/" + first.rater.label());
    }
  }
  require_uniform_kind(ratings_of(assessments));

  const Assessment* worst = &first;
  for (const auto& a : assessments) {
    if (a.rating.worse_than(worst->rating)) worst = &a;
  }
  Assessment out = *worst;
  out.screenshot_id.reset();
  return out;
}

SeverityScore severity_score(const std::string& task_id,
                             std::span<const Assessment> aggregated) {
  if (aggregated.empty()) {
    throw RankingError(Kind::EmptyInput, "no assessments for task '" + task_id + "'");
  }
  const auto kind = aggregated.front().rating.kind();
  std::set<std::string> criteria;
  long long total = 0;
  for (const auto& a : aggregated) {
    if (a.task_id != task_id) {
      throw RankingError(Kind::MixedCell,
                         "assessment for task '" + a.task_id + "' in score of '" + task_id + "'");
    }
    if (a.rating.kind() != kind) {
      throw RankingError(Kind::MixedMethod, "task '" + task_id + "' mixes grades and verdicts");
    }
    if (!criteria.insert(a.criterion_id).second) {
      throw RankingError(Kind::DuplicateCriterion, "criterion '" + a.criterion_id +
                                                       "' appears twice for task '" + task_id + "'");
    }
    total += a.rating.severity();
  }
  const auto n = static_cast<int>(aggregated.size());
  return SeverityScore{task_id, method_for(kind), static_cast<double>(total) / n, n};
}

SeverityRanking rank_tasks(std::span<const SeverityScore> scores) {
  SeverityRanking ranking;
  if (scores.empty()) return ranking;
  ranking.method = scores.front().method;
  std::set<std::string> seen;
  for (const auto& s : scores) {
    if (s.method != ranking.method) {
      throw RankingError(Kind::MixedMethod, "cannot rank Nielsen and walkthrough scores together");
    }
    if (!seen.insert(s.task_id).second) {
      throw RankingError(Kind::DuplicateTask, "task '" + s.task_id + "' scored twice");
    }
  }

  std::vector<const SeverityScore*> order;
  for (const auto& s : scores) order.push_back(&s);
  std::sort(order.begin(), order.end(), [](const SeverityScore* a, const SeverityScore* b) {
    if (a->score != b->score) return a->score > b->score;
    return a->task_id < b->task_id;
  });

  int rank = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || order[i]->score != order[i - 1]->score) ++rank;
    ranking.entries.push_back({rank, order[i]->task_id, order[i]->score});
  }
  return ranking;
}

std::vector<std::string> top_k(const SeverityRanking& ranking, int k) {
  if (k < 1) throw RankingError(Kind::InvalidArgument, "k must be >= 1");
  std::vector<std::string> out;
  for (const auto& e : ranking.entries) {
    if (static_cast<int>(out.size()) == k) break;
    out.push_back(e.task_id);
  }
  return out;
}

Rating majority_vote(std::span<const Rating> ratings) {
  if (ratings.empty()) throw RankingError(Kind::EmptyInput, "no ratings to vote on");
  require_uniform_kind(ratings);
  if (!ratings.front().is_grade()) {
    const auto failed = std::count_if(ratings.begin(), ratings.end(),
                                      [](const Rating& r) { return !r.passed(); });
    const auto passed = static_cast<std::ptrdiff_t>(ratings.size()) - failed;
    return Rating::binary(passed > failed ? Verdict::Passed : Verdict::Failed);
  }
  std::vector<int> grades;
  for (const auto& r : ratings) grades.push_back(r.grade_value());
  std::sort(grades.begin(), grades.end());
  const auto n = grades.size();
  // Upper middle for even counts: the worse of the two.
  return Rating::grade(grades[n / 2]);
}

Rating majority_vote(std::span<const Assessment> assessments) {
  for (const auto& a : assessments) {
    if (a.task_id != assessments.front().task_id ||
        a.criterion_id != assessments.front().criterion_id) {
      throw RankingError(Kind::MixedCell, "majority vote needs one (task, criterion)");
    }
  }
  const auto ratings = ratings_of(assessments);
  return majority_vote(std::span<const Rating>(ratings));
}

}  // namespace uxrank::ranking
