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

#include "uxrank/parser/response_parser.hpp"

#include <cmath>
#include <regex>

#include <json.hpp>

#include "uxrank/util/strings.hpp"

namespace uxrank::parser {
namespace {

using nlohmann::json;
using Kind = ParseError::Kind;

struct JsonCandidate {
  json object;
  std::size_t begin = 0;
  std::size_t end = 0;  // one past the closing brace
};

// End of the balanced {...} region starting at `open`, honouring JSON string
// literals, or npos when unbalanced.
std::size_t matching_brace(std::string_view text, std::size_t open) {
  int depth = 0;
  bool in_string = false;
  for (std::size_t i = open; i < text.size(); ++i) {
    const char c = text[i];
    if (in_string) {
      if (c == '\\') {
        ++i;
      } else if (c == '"') {
        in_string = false;
      }
      continue;
    }
    if (c == '"') {
      in_string = true;
    } else if (c == '{') {
      ++depth;
    } else if (c == '}') {
      if (--depth == 0) return i + 1;
    }
  }
  return std::string_view::npos;
}

std::optional<JsonCandidate> first_rating_object(std::string_view text) {
  std::size_t pos = 0;
  while ((pos = text.find('{', pos)) != std::string_view::npos) {
    const auto end = matching_brace(text, pos);
    if (end != std::string_view::npos) {
      auto parsed = json::parse(text.substr(pos, end - pos), nullptr, false);
      if (!parsed.is_discarded() && parsed.is_object()) {
        if (parsed.contains("grade") || parsed.contains("result")) {
          return JsonCandidate{std::move(parsed), pos, end};
        }
        pos = end;
        continue;
      }
    }
    ++pos;
  }
  return std::nullopt;
}

std::optional<long long> integral_value(const json& value) {
  if (value.is_number_integer()) return value.get<long long>();
  if (value.is_number_float()) {
    const double d = value.get<double>();
    if (std::isfinite(d) && d == std::floor(d) && std::fabs(d) < 1e15) {
      return static_cast<long long>(d);
    }
    return std::nullopt;
  }
  if (value.is_string()) {
    static const std::regex int_re(R"(^\s*(-?\d{1,15})\s*$)");
    const auto s = value.get<std::string>();
    std::smatch m;
    if (std::regex_match(s, m, int_re)) return std::stoll(m[1].str());
  }
  return std::nullopt;
}

Rating checked_grade(long long value) {
  if (value < Rating::kMinGrade || value > Rating::kMaxGrade) {
    throw ParseError(Kind::OutOfRangeGrade,
                     "grade " + std::to_string(value) + " is outside 1..5", value);
  }
  return Rating::grade(static_cast<int>(value));
}

std::string json_explanation(const json& object) {
  if (object.contains("explanation") && object["explanation"].is_string()) {
    return std::string(util::trim(object["explanation"].get<std::string>()));
  }
  return {};
}

// ---- fallback grammar -------------------------------------------------------

const std::regex& grade_re() {
  static const std::regex re(R"re("?\bgrade"?\s*[:=]\s*"?(-?\d+)"?(?:\s*/\s*5\b)?)re",
                             std::regex::icase);
  return re;
}

const std::regex& verdict_re() {
  static const std::regex re(
      R"re((?:\b(?:result|verdict|decision|assessment|rating|outcome)"?\s*[:=]\s*"?)?\b(passed|failed)\b"?)re",
      std::regex::icase);
  return re;
}

struct Match {
  std::string token;
  std::size_t begin = 0;
  std::size_t end = 0;
};

std::optional<Match> search(const std::string& text, const std::regex& re) {
  std::smatch m;
  if (!std::regex_search(text, m, re)) return std::nullopt;
  return Match{m[1].str(), static_cast<std::size_t>(m.position(0)),
               static_cast<std::size_t>(m.position(0) + m.length(0))};
}

bool is_separator(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0 || c == '.' || c == ',' ||
         c == ';' || c == ':' || c == '-' || c == '!';
}

std::string remaining_prose(const std::string& text, const Match& match) {
  std::string_view before(text.data(), match.begin);
  std::string_view after(text.data() + match.end, text.size() - match.end);
  while (!after.empty() && is_separator(after.front())) after.remove_prefix(1);
  while (!before.empty() && is_separator(before.back())) before.remove_suffix(1);
  std::string prose(util::trim(before));
  const auto tail = util::trim(after);
  if (!prose.empty() && !tail.empty()) prose += prose.back() == '.' ? " " : ". ";
  prose += tail;
  // Strip separators left at either end, e.g. a dangling "- ".
  std::string_view view = prose;
  while (!view.empty() && is_separator(view.front()) && view.front() != '.') view.remove_prefix(1);
  return std::string(util::trim(view));
}

ParsedAssessment fallback(const std::string& text, EvalMethod expected) {
  const auto grade = search(text, grade_re());
  const auto verdict = search(text, verdict_re());

  ParsedAssessment out;
  out.parse_mode = ParseMode::Fallback;
  std::optional<Match> used;
  if (expected == EvalMethod::NielsenHeuristics) {
    if (!grade) {
      if (verdict) {
        throw ParseError(Kind::SchemeMismatch,
                         "found a passed/failed verdict but a school grade was expected");
      }
      throw ParseError(Kind::Unparseable, "no grade found in response");
    }
    long long value = 0;
    try {
      value = std::stoll(grade->token);
    } catch (const std::out_of_range&) {
      throw ParseError(Kind::OutOfRangeGrade, "grade " + grade->token + " is outside 1..5");
    }
    out.rating = checked_grade(value);
    if (verdict) out.warnings.push_back("ignored verdict token '" + verdict->token + "'");
    used = grade;
  } else {
    if (!verdict) {
      if (grade) {
        throw ParseError(Kind::SchemeMismatch,
                         "found a grade but a passed/failed verdict was expected");
      }
      throw ParseError(Kind::Unparseable, "no passed/failed verdict found in response");
    }
    out.rating = Rating::binary(*verdict_from_token(util::to_lower(verdict->token)));
    if (grade) out.warnings.push_back("ignored grade token '" + grade->token + "'");
    used = verdict;
  }
  out.explanation = remaining_prose(text, *used);
  if (out.explanation.empty()) {
    throw ParseError(Kind::MissingExplanation, "rating found but no explanation");
  }
  return out;
}

ParsedAssessment strict(const JsonCandidate& candidate, const std::string& text,
                        EvalMethod expected) {
  const auto& object = candidate.object;
  const char* expected_key = expected == EvalMethod::NielsenHeuristics ? "grade" : "result";

  if (!object.contains(expected_key)) {
    // The object carries the other scheme's rating. Accept an explicit rating
    // of the expected kind elsewhere in the prose, otherwise report it.
    std::string rest = text.substr(0, candidate.begin) + " " + text.substr(candidate.end);
    try {
      auto out = fallback(rest, expected);
      out.warnings.push_back("JSON object carried a rating of the wrong scheme");
      return out;
    } catch (const ParseError&) {
      throw ParseError(Kind::SchemeMismatch,
                       expected == EvalMethod::NielsenHeuristics
                           ? "response has a passed/failed result but a school grade was expected"
                           : "response has a grade but a passed/failed result was expected");
    }
  }

  ParsedAssessment out;
  out.parse_mode = ParseMode::StrictJson;
  if (expected == EvalMethod::NielsenHeuristics) {
    const auto value = integral_value(object["grade"]);
    if (!value) {
      throw ParseError(Kind::Unparseable, "grade is not an integer: " + object["grade"].dump());
    }
    out.rating = checked_grade(*value);
    if (object.contains("result")) out.warnings.push_back("ignored \"result\" field");
  } else {
    const auto& result = object["result"];
    std::optional<Verdict> verdict;
    if (result.is_string()) {
      verdict = verdict_from_token(util::to_lower(util::trim(result.get<std::string>())));
    }
    if (!verdict) {
      throw ParseError(Kind::Unparseable, "result must be \"passed\" or \"failed\", got " +
                                              result.dump());
    }
    out.rating = Rating::binary(*verdict);
    if (object.contains("grade")) out.warnings.push_back("ignored \"grade\" field");
  }
  out.explanation = json_explanation(object);
  if (out.explanation.empty()) {
    throw ParseError(Kind::MissingExplanation, "rating found but no explanation");
  }
  return out;
}

}  // namespace

std::string_view to_string(ParseError::Kind kind) {
  switch (kind) {
    case Kind::Unparseable: return "Unparseable";
    case Kind::OutOfRangeGrade: return "OutOfRangeGrade";
    case Kind::SchemeMismatch: return "SchemeMismatch";
    case Kind::MissingExplanation: return "MissingExplanation";
  }
  return "ParseError";
}

ParsedAssessment parse_assessment(std::string_view text, EvalMethod expected) {
  const std::string owned(text);
  if (auto candidate = first_rating_object(owned)) return strict(*candidate, owned, expected);
  return fallback(owned, expected);
}

std::string to_strict_json(const Rating& rating, std::string_view explanation) {
  nlohmann::ordered_json object;
  if (rating.is_grade()) {
    object["grade"] = rating.grade_value();
  } else {
    object["result"] = std::string(to_token(rating.verdict()));
  }
  object["explanation"] = std::string(explanation);
  return object.dump();
}

}  // namespace uxrank::parser
