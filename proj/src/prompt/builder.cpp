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

#include "uxrank/prompt/builder.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#include "uxrank/core/image.hpp"

namespace uxrank::prompt {
namespace {

std::string persona_text(const Persona& persona) {
  if (persona.name.empty()) return persona.role_description;
  return persona.name + ": " + persona.role_description;
}

std::string load_image(const Screenshot& shot, const std::filesystem::path& root) {
  const auto file = root / shot.path;
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    throw PromptError(PromptError::Kind::ImageLoadError,
                      "cannot read screenshot '" + shot.id + "' at " + file.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  auto bytes = ss.str();
  const auto info = inspect_image(bytes);
  if (!info || info->media_type != shot.media_type) {
    throw PromptError(PromptError::Kind::ImageLoadError,
                      "screenshot '" + shot.id + "' does not decode as " +
                          std::string(to_token(shot.media_type)));
  }
  return bytes;
}

std::string substitute(const std::string& text, const PromptTemplate& tmpl,
                       const std::map<std::string, std::string>& values) {
  static const std::regex re(R"(\{([A-Za-z_][A-Za-z0-9_]*)\})");
  std::string out;
  auto last = text.cbegin();
  for (std::sregex_iterator it(text.begin(), text.end(), re), end; it != end; ++it) {
    const auto name = (*it)[1].str();
    if (!tmpl.placeholders.contains(name)) {
      throw PromptError(PromptError::Kind::UnresolvedPlaceholder,
                        "template '" + tmpl.name + "' uses undeclared placeholder {" + name + "}");
    }
    const auto value = values.find(name);
    if (value == values.end()) {
      throw PromptError(PromptError::Kind::UnresolvedPlaceholder,
                        "template '" + tmpl.name + "' uses placeholder {" + name +
                            "} which has no value source");
    }
    out.append(last, (*it)[0].first);
    out += value->second;
    last = (*it)[0].second;
  }
  out.append(last, text.cend());
  return out;
}

}  // namespace

const std::string& rating_instructions(EvalMethod method) {
  static const std::string grade =
      "Rate the screenshot against the criterion with a school grade from 1 "
      "to 5: 1 = very good, 2 = good, 3 = satisfactory, 4 = sufficient, "
      "5 = insufficient. Grades 1 to 4 mean the criterion is passed; grade 5 "
      "means it is failed. Use a worse grade the more severe the usability "
      "problems you identify are.";
  static const std::string binary =
      "Decide whether the criterion is passed or failed for this screenshot. "
      "Answer failed if the persona is likely to run into a problem at this "
      "step, otherwise answer passed.";
  return method == EvalMethod::NielsenHeuristics ? grade : binary;
}

const std::string& output_format(EvalMethod method) {
  static const std::string grade =
      "Respond with a single JSON object and nothing else, in the form "
      "{\"grade\": <integer from 1 to 5>, \"explanation\": \"<why you gave this "
      "grade and how the problem could be resolved>\"}";
  static const std::string binary =
      "Respond with a single JSON object and nothing else, in the form "
      "{\"result\": \"passed\" or \"failed\", \"explanation\": \"<why the "
      "criterion is passed or failed and how a problem could be resolved>\"}";
  return method == EvalMethod::NielsenHeuristics ? grade : binary;
}

PromptBundle build_prompt(const PromptTemplate& tmpl, const ApplicationProfile& app,
                          const Persona& persona, const UserTask& task,
                          const Screenshot& screenshot, const Criterion& criterion,
                          const std::filesystem::path& image_root) {
  if (std::find(task.screenshots.begin(), task.screenshots.end(), screenshot.id) ==
      task.screenshots.end()) {
    throw PromptError(PromptError::Kind::InvalidInput,
                      "screenshot '" + screenshot.id + "' does not belong to task '" + task.id + "'");
  }
  if (persona.id != task.persona_id) {
    throw PromptError(PromptError::Kind::InvalidInput,
                      "persona '" + persona.id + "' is not the persona of task '" + task.id + "'");
  }

  const std::map<std::string, std::string> values = {
      {"application_name", app.name},
      {"application_description", app.description},
      {"persona", persona_text(persona)},
      {"persona_name", persona.name},
      {"task_title", task.title},
      {"task_description", task.description},
      {"screenshot_caption", screenshot.caption.value_or("")},
      {"criterion", criterion.prompt_text},
      {"criterion_title", criterion.title},
      {"method", std::string(display_name(criterion.method))},
      {"rating_instructions", rating_instructions(criterion.method)},
      {"output_format", output_format(criterion.method)},
  };
  for (const auto& [name, value] : values) {
    if (contains_placeholder(value)) {
      throw PromptError(PromptError::Kind::InvalidInput,
                        "value for {" + name + "} contains a placeholder token");
    }
  }

  PromptBundle bundle;
  bundle.system_text = substitute(tmpl.system_text, tmpl, values);
  bundle.user_text = substitute(tmpl.user_text, tmpl, values);
  bundle.images.push_back({screenshot.media_type, load_image(screenshot, image_root)});
  bundle.metadata = {task.id, screenshot.id, criterion.id, criterion.method};
  return bundle;
}

}  // namespace uxrank::prompt
