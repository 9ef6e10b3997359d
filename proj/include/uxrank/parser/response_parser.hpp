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

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "uxrank/core/model.hpp"

namespace uxrank::parser {

enum class ParseMode { StrictJson, Fallback };

struct ParsedAssessment {
  Rating rating = Rating::grade(1);
  std::string explanation;
  ParseMode parse_mode = ParseMode::StrictJson;
  /// Non-fatal oddities, e.g. a conflicting rating token that was ignored.
  std::vector<std::string> warnings;
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Unparseable, OutOfRangeGrade, SchemeMismatch, MissingExplanation };

  ParseError(Kind kind, const std::string& what, std::optional<long long> value = std::nullopt)
      : std::runtime_error(what), kind_(kind), value_(value) {}

  Kind kind() const { return kind_; }
  /// The offending grade for OutOfRangeGrade.
  std::optional<long long> value() const { return value_; }

 private:
  Kind kind_;
  std::optional<long long> value_;
};

std::string_view to_string(ParseError::Kind kind);

/// Extracts a rating and explanation from a raw model reply.
///
/// Strict path: the first syntactically valid JSON object carrying a "grade"
/// or "result" key. For Nielsen the object must be
/// {"grade": 1..5, "explanation": "..."}; for the walkthrough
/// {"result": "passed"|"failed", "explanation": "..."}.
///
/// Fallback path (no such object): case-insensitive `grade [:=] N` or a
/// standalone passed/failed token; the explanation is the remaining prose.
///
/// Throws ParseError.
ParsedAssessment parse_assessment(std::string_view text, EvalMethod expected);

/// The strict JSON form of a rating + explanation, as requested from models.
std::string to_strict_json(const Rating& rating, std::string_view explanation);

}  // namespace uxrank::parser
