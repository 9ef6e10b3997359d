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

// Domain value types shared by every stage of the evaluation pipeline.

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace uxrank {

enum class EvalMethod { NielsenHeuristics, CognitiveWalkthrough };

/// Short stable token used on the command line and in files
/// ("nielsen" / "walkthrough").
std::string_view to_token(EvalMethod method);
std::optional<EvalMethod> method_from_token(std::string_view token);
std::string_view display_name(EvalMethod method);

enum class Verdict { Passed, Failed };

std::string_view to_token(Verdict verdict);
std::optional<Verdict> verdict_from_token(std::string_view token);

enum class RatingKind { Grade, Binary };

/// Rating scheme implied by an evaluation method.
RatingKind rating_kind_for(EvalMethod method);
EvalMethod method_for(RatingKind kind);

/// A school grade (1 best .. 5 worst; 1-4 pass, 5 fail) or a binary verdict.
///
/// Within a scheme ratings are totally ordered by severity. Comparing ratings
/// of different kinds is a logic error and throws std::logic_error.
class Rating {
 public:
  static constexpr int kMinGrade = 1;
  static constexpr int kMaxGrade = 5;

  /// Throws std::out_of_range unless 1 <= value <= 5.
  static Rating grade(int value);
  static Rating binary(Verdict verdict);

  RatingKind kind() const;
  bool is_grade() const { return std::holds_alternative<int>(value_); }

  /// Precondition: is_grade().
  int grade_value() const;
  /// Precondition: !is_grade().
  Verdict verdict() const;

  /// Integer severity inside the scheme: the grade itself, or 0 (Passed) /
  /// 1 (Failed). Larger is always worse.
  int severity() const;

  bool passed() const;

  /// True when this rating is strictly worse than `other`. Both ratings must
  /// share a kind.
  bool worse_than(const Rating& other) const;

  std::string to_string() const;

  friend bool operator==(const Rating&, const Rating&) = default;

 private:
  explicit Rating(std::variant<int, Verdict> v) : value_(v) {}
  std::variant<int, Verdict> value_;
};

struct RaterId {
  enum class Kind { Model, Expert };

  Kind kind = Kind::Model;
  std::string id;

  static RaterId model(std::string id) { return {Kind::Model, std::move(id)}; }
  static RaterId expert(std::string id) { return {Kind::Expert, std::move(id)}; }

  bool is_model() const { return kind == Kind::Model; }
  /// "model:<id>" or "expert:<id>".
  std::string label() const;

  friend auto operator<=>(const RaterId&, const RaterId&) = default;
};

struct Persona {
  std::string id;
  std::string name;
  std::string role_description;
  friend bool operator==(const Persona&, const Persona&) = default;
};

struct ApplicationProfile {
  std::string name;
  std::string description;
  friend bool operator==(const ApplicationProfile&, const ApplicationProfile&) = default;
};

enum class MediaType { Png, Jpeg, Webp };

std::string_view to_token(MediaType type);
std::optional<MediaType> media_type_from_token(std::string_view token);
std::string_view mime_type(MediaType type);

struct Screenshot {
  std::string id;
  /// As written in the project file; relative paths resolve against the
  /// project directory.
  std::string path;
  MediaType media_type = MediaType::Png;
  std::optional<std::string> caption;
  friend bool operator==(const Screenshot&, const Screenshot&) = default;
};

struct UserTask {
  std::string id;
  std::string title;
  std::string description;
  std::string persona_id;
  std::vector<std::string> screenshots;
  friend bool operator==(const UserTask&, const UserTask&) = default;
};

struct Criterion {
  std::string id;
  EvalMethod method = EvalMethod::NielsenHeuristics;
  std::string title;
  std::string prompt_text;

  RatingKind rating_kind() const { return rating_kind_for(method); }
  friend bool operator==(const Criterion&, const Criterion&) = default;
};

struct Assessment {
  std::string task_id;
  std::optional<std::string> screenshot_id;
  std::string criterion_id;
  RaterId rater;
  Rating rating = Rating::grade(1);
  std::string explanation;
  std::optional<std::string> raw_response_id;
  friend bool operator==(const Assessment&, const Assessment&) = default;
};

struct ModelSpec {
  std::string id;
  std::string provider;
  std::string version;
  std::optional<double> temperature;
  bool supports_temperature = true;
  std::string category;

  /// Model name sent to the provider: "<id>-<version>", or the bare id when
  /// no version is pinned.
  std::string api_name() const;

  /// Temperature to send, or nullopt when the parameter must be omitted.
  /// Models that accept a temperature default to 0.
  std::optional<double> effective_temperature() const;

  friend bool operator==(const ModelSpec&, const ModelSpec&) = default;
};

struct EvaluationProject {
  ApplicationProfile application;
  std::vector<Persona> personas;
  std::vector<Screenshot> screenshots;
  std::vector<UserTask> tasks;
  /// Selected criterion ids. Empty means every built-in criterion.
  std::vector<std::string> criteria;
  std::vector<Criterion> custom_criteria;
  std::vector<ModelSpec> models;

  const Persona* find_persona(std::string_view id) const;
  const Screenshot* find_screenshot(std::string_view id) const;
  const UserTask* find_task(std::string_view id) const;
  const ModelSpec* find_model(std::string_view id) const;

  /// Looks up custom criteria first, then the built-in catalogs.
  std::optional<Criterion> find_criterion(std::string_view id) const;

  /// Selected criteria of one method, in selection order. With an empty
  /// selection: the built-in catalog followed by custom criteria.
  std::vector<Criterion> criteria_for(EvalMethod method) const;
};

}  // namespace uxrank
