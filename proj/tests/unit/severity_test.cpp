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

#include "support/fixtures.hpp"
#include "uxrank/ranking/severity.hpp"

using namespace uxrank;
using namespace uxrank::ranking;
using testing::make_assessment;

namespace {

const RaterId kModel = RaterId::model("m");

Assessment graded(const std::string& task, const std::string& crit, int g,
                  std::optional<std::string> shot = std::nullopt) {
  return make_assessment(task, crit, kModel, Rating::grade(g), std::move(shot));
}

Assessment verdict(const std::string& task, const std::string& crit, Verdict v) {
  return make_assessment(task, crit, kModel, Rating::binary(v));
}

}  // namespace

TEST_CASE("aggregation keeps the worst rating and its explanation") {
  auto a = graded("t", "c", 2, "s1");
  auto b = graded("t", "c", 4, "s2");
  b.explanation = "second screen is worse";
  b.raw_response_id = "abc";
  auto c = graded("t", "c", 4, "s3");
  std::vector<Assessment> in{a, b, c};
  const auto out = aggregate_screenshots(in);
  CHECK(out.rating == Rating::grade(4));
  CHECK(out.explanation == "second screen is worse");
  CHECK(out.raw_response_id == "abc");
  CHECK_FALSE(out.screenshot_id);
}

TEST_CASE("aggregation rejects bad groups") {
  std::vector<Assessment> empty;
  CHECK_THROWS_AS(aggregate_screenshots(empty), RankingError);
  std::vector<Assessment> mixed{graded("t", "c", 2), verdict("t", "c", Verdict::Failed)};
  CHECK_THROWS_AS(aggregate_screenshots(mixed), RankingError);
  std::vector<Assessment> cells{graded("t", "c", 2), graded("t", "d", 2)};
  CHECK_THROWS_AS(aggregate_screenshots(cells), RankingError);
}

TEST_CASE("severity score is the mean severity") {
  std::vector<Assessment> grades{graded("t", "a", 1), graded("t", "b", 2), graded("t", "c", 4)};
  const auto s = severity_score("t", grades);
  CHECK(s.score == doctest::Approx(7.0 / 3.0));
  CHECK(s.criteria_count == 3);
  CHECK(s.method == EvalMethod::NielsenHeuristics);

  std::vector<Assessment> verdicts{verdict("t", "a", Verdict::Failed), verdict("t", "b", Verdict::Passed),
                                   verdict("t", "c", Verdict::Passed), verdict("t", "d", Verdict::Failed)};
  const auto w = severity_score("t", verdicts);
  CHECK(w.score == 0.5);
  CHECK(w.method == EvalMethod::CognitiveWalkthrough);
}

TEST_CASE("severity score rejects duplicates and foreign tasks") {
  std::vector<Assessment> dup{graded("t", "a", 1), graded("t", "a", 2)};
  CHECK_THROWS_AS(severity_score("t", dup), RankingError);
  std::vector<Assessment> other{graded("u", "a", 1)};
  CHECK_THROWS_AS(severity_score("t", other), RankingError);
  std::vector<Assessment> none;
  CHECK_THROWS_AS(severity_score("t", none), RankingError);
}

TEST_CASE("ranking is worst first with dense shared ranks") {
  std::vector<SeverityScore> scores{
      {"b", EvalMethod::NielsenHeuristics, 3.0, 2},
      {"a", EvalMethod::NielsenHeuristics, 3.0, 2},
      {"c", EvalMethod::NielsenHeuristics, 4.5, 2},
      {"d", EvalMethod::NielsenHeuristics, 1.0, 2},
  };
  const auto r = rank_tasks(scores);
  REQUIRE(r.entries.size() == 4);
  CHECK(r.entries[0] == RankEntry{1, "c", 4.5});
  CHECK(r.entries[1] == RankEntry{2, "a", 3.0});
  CHECK(r.entries[2] == RankEntry{2, "b", 3.0});
  CHECK(r.entries[3] == RankEntry{3, "d", 1.0});

  CHECK(top_k(r, 2) == std::vector<std::string>{"c", "a"});
  CHECK(top_k(r, 10).size() == 4);
  CHECK_THROWS_AS(top_k(r, 0), RankingError);

  std::vector<SeverityScore> dup{scores[0], scores[0]};
  CHECK_THROWS_AS(rank_tasks(dup), RankingError);
  std::vector<SeverityScore> mixed{scores[0], {"x", EvalMethod::CognitiveWalkthrough, 0.5, 1}};
  CHECK_THROWS_AS(rank_tasks(mixed), RankingError);
}

TEST_CASE("majority vote") {
  using V = Verdict;
  std::vector<Rating> binary{Rating::binary(V::Passed), Rating::binary(V::Failed)};
  CHECK(majority_vote(std::span<const Rating>(binary)) == Rating::binary(V::Failed));
  binary.push_back(Rating::binary(V::Passed));
  CHECK(majority_vote(std::span<const Rating>(binary)) == Rating::binary(V::Passed));

  std::vector<Rating> grades{Rating::grade(1), Rating::grade(5), Rating::grade(2)};
  CHECK(majority_vote(std::span<const Rating>(grades)) == Rating::grade(2));
  grades.push_back(Rating::grade(4));
  CHECK(majority_vote(std::span<const Rating>(grades)) == Rating::grade(4));
}
