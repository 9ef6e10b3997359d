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

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "uxrank/core/model.hpp"
#include "uxrank/prompt/template.hpp"

namespace uxrank::prompt {

struct ImagePart {
  MediaType media_type = MediaType::Png;
  std::string bytes;
  friend bool operator==(const ImagePart&, const ImagePart&) = default;
};

struct PromptMetadata {
  std::string task_id;
  std::string screenshot_id;
  std::string criterion_id;
  EvalMethod method = EvalMethod::NielsenHeuristics;
  friend bool operator==(const PromptMetadata&, const PromptMetadata&) = default;
};

/// A fully substituted single-criterion prompt with its screenshot attached.
struct PromptBundle {
  std::string system_text;
  std::string user_text;
  std::vector<ImagePart> images;
  PromptMetadata metadata;
};

class PromptError : public std::runtime_error {
 public:
  enum class Kind { UnresolvedPlaceholder, ImageLoadError, InvalidInput };

  PromptError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Rating-scale instructions for the scheme of `method`.
const std::string& rating_instructions(EvalMethod method);

/// Output contract matching the strict grammar of the response parser.
const std::string& output_format(EvalMethod method);

/// Builds the prompt for one (task, screenshot, criterion). The screenshot is
/// read from `image_root / screenshot.path`.
///
/// Available placeholders: application_name, application_description,
/// persona, persona_name, task_title, task_description, screenshot_caption,
/// criterion, criterion_title, method, rating_instructions, output_format.
///
/// Throws PromptError: UnresolvedPlaceholder when the template uses an
/// undeclared or unknown placeholder; ImageLoadError when the screenshot is
/// unreadable or does not decode as its declared type; InvalidInput when the
/// screenshot or persona does not belong to the task, or a substituted value
/// itself contains a placeholder.
PromptBundle build_prompt(const PromptTemplate& tmpl, const ApplicationProfile& app,
                          const Persona& persona, const UserTask& task,
                          const Screenshot& screenshot, const Criterion& criterion,
                          const std::filesystem::path& image_root = {});

}  // namespace uxrank::prompt
