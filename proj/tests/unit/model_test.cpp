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

#include "uxrank/core/criteria.hpp"
#include "uxrank/core/model.hpp"

using namespace uxrank;

TEST_CASE("grades outside 1..5 are rejected") {
  CHECK_THROWS_AS(Rating::grade(0), std::out_of_range);
  CHECK_THROWS_AS(Rating::grade(6), std::out_of_range);
  CHECK(Rating::grade(5).grade_value() == 5);
}

TEST_CASE("rating severity and pass/fail") {
  CHECK(Rating::grade(4).passed());
  CHECK_FALSE(Rating::grade(5).passed());
  CHECK(Rating::binary(Verdict::Passed).severity() == 0);
  CHECK(Rating::binary(Verdict::Failed).severity() == 1);
  CHECK(Rating::grade(3).worse_than(Rating::grade(2)));
  CHECK_FALSE(Rating::grade(2).worse_than(Rating::grade(2)));
  CHECK(Rating::binary(Verdict::Failed).worse_than(Rating::binary(Verdict::Passed)));
}

TEST_CASE("comparing ratings of different kinds is a logic error") {
  CHECK_THROWS_AS((void)Rating::grade(1).worse_than(Rating::binary(Verdict::Failed)),
                  std::logic_error);
}

TEST_CASE("method and verdict tokens round trip") {
  for (auto m : {EvalMethod::NielsenHeuristics, EvalMethod::CognitiveWalkthrough}) {
    CHECK(method_from_token(to_token(m)) == m);
    CHECK(method_for(rating_kind_for(m)) == m);
  }
  CHECK(method_from_token("heuristics") == std::nullopt);
  CHECK(verdict_from_token("failed") == Verdict::Failed);
  CHECK(rating_kind_for(EvalMethod::CognitiveWalkthrough) == RatingKind::Binary);
}

TEST_CASE("rater labels") {
  CHECK(RaterId::model("m1").label() == "model:m1");
  CHECK(RaterId::expert("e").label() == "expert:e");
  CHECK(RaterId::model("x") != RaterId::expert("x"));
}

TEST_CASE("model api name and effective temperature") {
  ModelSpec m{"gpt", "openai", "4o", std::nullopt, true, ""};
  CHECK(m.api_name() == "gpt-4o");
  CHECK(m.effective_temperature() == 0.0);
  m.temperature = 0.7;
  CHECK(m.effective_temperature() == 0.7);
  m.supports_temperature = false;
  CHECK(m.effective_temperature() == std::nullopt);
  m.version.clear();
  CHECK(m.api_name() == "gpt");
}

TEST_CASE("built-in catalogs") {
  const auto& nielsen = builtin_criteria(EvalMethod::NielsenHeuristics);
  const auto& cw = builtin_criteria(EvalMethod::CognitiveWalkthrough);
  REQUIRE(nielsen.size() == 10);
  REQUIRE(cw.size() == 4);
  CHECK(nielsen.front().id == "nielsen-01");
  CHECK(nielsen.back().id == "nielsen-10");
  CHECK(cw.back().id == "cw-04");
  for (const auto& c : nielsen) {
    CHECK(c.method == EvalMethod::NielsenHeuristics);
    CHECK(c.prompt_text.starts_with(c.title));
  }
  for (const auto& c : cw) CHECK(c.rating_kind() == RatingKind::Binary);
  CHECK(&builtin_criteria(EvalMethod::NielsenHeuristics) == &nielsen);
}

TEST_CASE("criteria selection") {
  EvaluationProject p;
  Criterion custom{"my-check", EvalMethod::CognitiveWalkthrough, "Custom", "Is it fine?"};
  p.custom_criteria.push_back(custom);

  SUBCASE("empty selection uses every built-in plus custom criteria") {
    CHECK(p.criteria_for(EvalMethod::NielsenHeuristics).size() == 10);
    const auto cw = p.criteria_for(EvalMethod::CognitiveWalkthrough);
    REQUIRE(cw.size() == 5);
    CHECK(cw.back() == custom);
  }
  SUBCASE("explicit selection keeps its order and method") {
    p.criteria = {"nielsen-05", "my-check", "nielsen-01"};
    const auto n = p.criteria_for(EvalMethod::NielsenHeuristics);
    REQUIRE(n.size() == 2);
    CHECK(n[0].id == "nielsen-05");
    CHECK(n[1].id == "nielsen-01");
    CHECK(p.criteria_for(EvalMethod::CognitiveWalkthrough).size() == 1);
  }
  CHECK(p.find_criterion("cw-02").has_value());
  CHECK_FALSE(p.find_criterion("nope").has_value());
}
