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

#include "uxrank/core/model.hpp"

#include <algorithm>

#include "uxrank/core/criteria.hpp"

namespace uxrank {

std::string_view to_token(EvalMethod method) {
  return method == EvalMethod::NielsenHeuristics ? "nielsen" : "walkthrough";
}

std::optional<EvalMethod> method_from_token(std::string_view token) {
  if (token == "nielsen") return EvalMethod::NielsenHeuristics;
  if (token == "walkthrough") return EvalMethod::CognitiveWalkthrough;
  return std::nullopt;
}

std::string_view display_name(EvalMethod method) {
  return method == EvalMethod::NielsenHeuristics ? "Nielsen heuristics"
                                                 : "Cognitive walkthrough";
}

std::string_view to_token(Verdict verdict) {
  return verdict == Verdict::Passed ? "passed" : "failed";
}

std::optional<Verdict> verdict_from_token(std::string_view token) {
  if (token == "passed") return Verdict::Passed;
  if (token == "failed") return Verdict::Failed;
  return std::nullopt;
}

RatingKind rating_kind_for(EvalMethod method) {
  return method == EvalMethod::NielsenHeuristics ? RatingKind::Grade
                                                 : RatingKind::Binary;
}

EvalMethod method_for(RatingKind kind) {
  return kind == RatingKind::Grade ? EvalMethod::NielsenHeuristics
                                   : EvalMethod::CognitiveWalkthrough;
}

Rating Rating::grade(int value) {
  if (value < kMinGrade || value > kMaxGrade) {
    throw std::out_of_range("grade " + std::to_string(value) +
                            " outside 1..5");
  }
  return Rating(value);
}

Rating Rating::binary(Verdict verdict) { return Rating(verdict); }

RatingKind Rating::kind() const {
  return is_grade() ? RatingKind::Grade : RatingKind::Binary;
}

int Rating::grade_value() const {
  if (!is_grade()) throw std::logic_error("binary rating has no grade");
  return std::get<int>(value_);
}

Verdict Rating::verdict() const {
  if (is_grade()) throw std::logic_error("grade rating has no verdict");
  return std::get<Verdict>(value_);
}

int Rating::severity() const {
  if (is_grade()) return std::get<int>(value_);
  return std::get<Verdict>(value_) == Verdict::Failed ? 1 : 0;
}

bool Rating::passed() const {
  if (is_grade()) return std::get<int>(value_) < kMaxGrade;
  return std::get<Verdict>(value_) == Verdict::Passed;
}

bool Rating::worse_than(const Rating& other) const {
  if (kind() != other.kind()) {
    throw std::logic_error("cannot compare " + to_string() + " with " +
                           other.to_string());
  }
  return severity() > other.severity();
}

std::string Rating::to_string() const {
  if (is_grade()) return "grade " + std::to_string(std::get<int>(value_));
  return std::string(to_token(std::get<Verdict>(value_)));
}

std::string RaterId::label() const {
  return (kind == Kind::Model ? "model:" : "expert:") + id;
}

std::string_view to_token(MediaType type) {
  switch (type) {
    case MediaType::Png: return "png";
    case MediaType::Jpeg: return "jpeg";
    case MediaType::Webp: return "webp";
  }
  return "png";
}

std::optional<MediaType> media_type_from_token(std::string_view token) {
  if (token == "png") return MediaType::Png;
  if (token == "jpeg") return MediaType::Jpeg;
  if (token == "webp") return MediaType::Webp;
  return std::nullopt;
}

std::string_view mime_type(MediaType type) {
  switch (type) {
    case MediaType::Png: return "image/png";
    case MediaType::Jpeg: return "image/jpeg";
    case MediaType::Webp: return "image/webp";
  }
  return "application/octet-stream";
}

std::string ModelSpec::api_name() const {
  return version.empty() ? id : id + "-" + version;
}

std::optional<double> ModelSpec::effective_temperature() const {
  if (!supports_temperature) return std::nullopt;
  return temperature.value_or(0.0);
}

namespace {
template <typename T>
const T* find_by_id(const std::vector<T>& items, std::string_view id) {
  auto it = std::find_if(items.begin(), items.end(),
                         [&](const T& item) { return item.id == id; });
  return it == items.end() ? nullptr : &*it;
}
}  // namespace

const Persona* EvaluationProject::find_persona(std::string_view id) const {
  return find_by_id(personas, id);
}
const Screenshot* EvaluationProject::find_screenshot(std::string_view id) const {
  return find_by_id(screenshots, id);
}
const UserTask* EvaluationProject::find_task(std::string_view id) const {
  return find_by_id(tasks, id);
}
const ModelSpec* EvaluationProject::find_model(std::string_view id) const {
  return find_by_id(models, id);
}

std::optional<Criterion> EvaluationProject::find_criterion(std::string_view id) const {
  if (const auto* c = find_by_id(custom_criteria, id)) return *c;
  for (auto method : {EvalMethod::NielsenHeuristics, EvalMethod::CognitiveWalkthrough}) {
    if (const auto* c = find_by_id(builtin_criteria(method), id)) return *c;
  }
  return std::nullopt;
}

std::vector<Criterion> EvaluationProject::criteria_for(EvalMethod method) const {
  std::vector<Criterion> out;
  if (criteria.empty()) {
    out = builtin_criteria(method);
    for (const auto& c : custom_criteria) {
      if (c.method == method) out.push_back(c);
    }
    return out;
  }
  for (const auto& id : criteria) {
    auto c = find_criterion(id);
    if (c && c->method == method) out.push_back(*std::move(c));
  }
  return out;
}

}  // namespace uxrank
