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

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "uxrank/core/model.hpp"

namespace uxrank::ranking {

class RankingError : public std::runtime_error {
 public:
  enum class Kind {
    EmptyInput,
    MixedScheme,          ///< ratings of different kinds in one group
    MixedMethod,          ///< scores or assessments of different methods
    MixedCell,            ///< inputs do not share task / criterion / rater
    DuplicateCriterion,
    DuplicateTask,
    InvalidArgument,
  };

  RankingError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Mean severity of one task for one rater and method. Nielsen: mean grade
/// in [1, 5]. Walkthrough: fraction of failed criteria in [0, 1]. Higher is
/// worse for both.
struct SeverityScore {
  std::string task_id;
  EvalMethod method = EvalMethod::NielsenHeuristics;
  double score = 0.0;
  int criteria_count = 0;
  friend bool operator==(const SeverityScore&, const SeverityScore&) = default;
};

struct RankEntry {
  int rank = 1;
  std::string task_id;
  double score = 0.0;
  friend bool operator==(const RankEntry&, const RankEntry&) = default;
};

/// Tasks worst-first with dense ranks; equal scores share a rank and are
/// listed in lexical task-id order.
struct SeverityRanking {
  EvalMethod method = EvalMethod::NielsenHeuristics;
  std::vector<RankEntry> entries;
  friend bool operator==(const SeverityRanking&, const SeverityRanking&) = default;
};

/// Collapses the per-screenshot assessments of one (task, criterion, rater)
/// into one: the worst rating wins, ties go to the earliest input. The
/// result keeps that input's explanation and raw_response_id and has no
/// screenshot_id.
Assessment aggregate_screenshots(std::span<const Assessment> assessments);

/// Severity of `task_id` from one aggregated assessment per criterion.
SeverityScore severity_score(const std::string& task_id,
                             std::span<const Assessment> aggregated);

SeverityRanking rank_tasks(std::span<const SeverityScore> scores);

/// The first k task ids of the ranking (all of them when fewer than k).
/// Throws RankingError(InvalidArgument) for k < 1.
std::vector<std::string> top_k(const SeverityRanking& ranking, int k);

/// Ensemble rating for one (task, criterion) across raters. Binary: majority
/// verdict, an exact tie resolves to Failed. Grade: median, for an even
/// count the worse of the two middle grades.
Rating majority_vote(std::span<const Rating> ratings);
Rating majority_vote(std::span<const Assessment> assessments);

}  // namespace uxrank::ranking
