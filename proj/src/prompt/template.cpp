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

#include "uxrank/prompt/template.hpp"

#include <algorithm>
#include <regex>

#include "uxrank/util/strings.hpp"

namespace uxrank::prompt {
namespace {

const std::regex& placeholder_re() {
  static const std::regex re(R"(\{([A-Za-z_][A-Za-z0-9_]*)\})");
  return re;
}

constexpr std::string_view kSystemMarker = "---system";
constexpr std::string_view kUserMarker = "---user";

}  // namespace

std::vector<std::string> placeholders_in(std::string_view text) {
  std::vector<std::string> out;
  const std::string s(text);
  for (std::sregex_iterator it(s.begin(), s.end(), placeholder_re()), end; it != end; ++it) {
    auto name = (*it)[1].str();
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(std::move(name));
  }
  return out;
}

bool contains_placeholder(std::string_view text) {
  const std::string s(text);
  return std::regex_search(s, placeholder_re());
}

std::vector<std::string> template_problems(const PromptTemplate& tmpl, bool require_standard) {
  std::vector<std::string> problems;
  std::set<std::string> used;
  for (const auto* text : {&tmpl.system_text, &tmpl.user_text}) {
    for (auto& name : placeholders_in(*text)) used.insert(std::move(name));
  }
  for (const auto& name : used) {
    if (!tmpl.placeholders.contains(name)) {
      problems.push_back("placeholder {" + name + "} is used but not declared");
    }
  }
  for (const auto& name : tmpl.placeholders) {
    if (!used.contains(name)) {
      problems.push_back("placeholder {" + name + "} is declared but never used");
    }
  }
  if (require_standard) {
    for (auto name : kRequiredPlaceholders) {
      if (!tmpl.placeholders.contains(std::string(name))) {
        problems.push_back("required placeholder {" + std::string(name) + "} is not declared");
      }
    }
  }
  return problems;
}

PromptTemplate parse_template(std::string_view text) {
  PromptTemplate tmpl;
  bool have_name = false;
  bool have_placeholders = false;

  auto lines = util::split(text, '\n');
  std::size_t i = 0;
  for (; i < lines.size(); ++i) {
    const auto line = util::rtrim(lines[i]);
    if (line == kSystemMarker) break;
    const auto trimmed = util::trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const auto colon = trimmed.find(':');
    if (colon == std::string_view::npos) {
      throw TemplateError("template line " + std::to_string(i + 1) + ": expected 'key: value'");
    }
    const auto key = util::trim(trimmed.substr(0, colon));
    const auto value = util::trim(trimmed.substr(colon + 1));
    if (key == "name") {
      tmpl.name = std::string(value);
      have_name = true;
    } else if (key == "placeholders") {
      for (const auto& part : util::split(value, ',')) {
        const auto name = util::trim(part);
        if (!name.empty()) tmpl.placeholders.insert(std::string(name));
      }
      have_placeholders = true;
    } else {
      throw TemplateError("template line " + std::to_string(i + 1) + ": unknown key '" +
                          std::string(key) + "'");
    }
  }
  if (i == lines.size()) throw TemplateError("template has no '---system' section");
  if (!have_name || tmpl.name.empty()) throw TemplateError("template front matter lacks 'name'");
  if (!have_placeholders) throw TemplateError("template front matter lacks 'placeholders'");

  std::size_t user_marker = lines.size();
  for (std::size_t j = i + 1; j < lines.size(); ++j) {
    const auto line = util::rtrim(lines[j]);
    if (line == kUserMarker) {
      user_marker = j;
      break;
    }
    if (line == kSystemMarker) throw TemplateError("duplicate '---system' section");
  }
  if (user_marker == lines.size()) throw TemplateError("template has no '---user' section");

  auto section = [&](std::size_t from, std::size_t to) {
    std::vector<std::string> body(lines.begin() + static_cast<std::ptrdiff_t>(from),
                                  lines.begin() + static_cast<std::ptrdiff_t>(to));
    return util::join(body, "\n");
  };
  tmpl.system_text = section(i + 1, user_marker);
  // A file normally ends with a newline, which split() turns into a final
  // empty element that is not part of the section.
  std::size_t end = lines.size();
  if (end > user_marker + 1 && lines.back().empty()) --end;
  tmpl.user_text = section(user_marker + 1, end);
  for (std::size_t j = user_marker + 1; j < end; ++j) {
    const auto line = util::rtrim(lines[j]);
    if (line == kSystemMarker || line == kUserMarker) {
      throw TemplateError("unexpected section marker after '---user'");
    }
  }

  if (auto problems = template_problems(tmpl); !problems.empty()) {
    throw TemplateError("template '" + tmpl.name + "': " + util::join(problems, "; "));
  }
  return tmpl;
}

std::string serialize_template(const PromptTemplate& tmpl) {
  std::vector<std::string> names(tmpl.placeholders.begin(), tmpl.placeholders.end());
  std::string out;
  out += "name: " + tmpl.name + "\n";
  out += "placeholders: " + util::join(names, ", ") + "\n";
  out += std::string(kSystemMarker) + "\n";
  out += tmpl.system_text + "\n";
  out += std::string(kUserMarker) + "\n";
  out += tmpl.user_text + "\n";
  return out;
}

PromptTemplate load_template_file(const std::filesystem::path& path) {
  std::string text;
  try {
    text = util::read_file(path.string());
  } catch (const std::exception& e) {
    throw TemplateError(e.what());
  }
  return parse_template(text);
}

const PromptTemplate& default_template() {
  static const PromptTemplate tmpl = [] {
    PromptTemplate t;
    t.name = "usability-single-criterion";
    t.system_text =
        "You are a usability expert evaluating a screenshot of a software "
        "application. Assess only what is visible in the screenshot, from the "
        "point of view of the persona described below, and only against the "
        "single evaluation criterion you are given. Explain your assessment "
        "the way an experienced usability evaluator would.";
    t.user_text =
        "Application description:\n"
        "{application_description}\n"
        "\n"
        "Persona:\n"
        "{persona}\n"
        "\n"
        "Task of the persona:\n"
        "{task_description}\n"
        "\n"
        "Evaluation criterion:\n"
        "{criterion}\n"
        "\n"
        "Rating:\n"
        "{rating_instructions}\n"
        "\n"
        "Output format:\n"
        "{output_format}";
    t.placeholders = {"application_description", "persona", "task_description",
                      "criterion", "rating_instructions", "output_format"};
    return t;
  }();
  return tmpl;
}

}  // namespace uxrank::prompt
