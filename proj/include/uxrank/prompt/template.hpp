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

#include <array>
#include <filesystem>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace uxrank::prompt {

/// Placeholders every loadable template must declare and use.
inline constexpr std::array<std::string_view, 5> kRequiredPlaceholders = {
    "application_description", "persona", "criterion", "rating_instructions",
    "output_format"};

/// A prompt template. Placeholders are written `{name}` where name matches
/// [A-Za-z_][A-Za-z0-9_]*; any other brace usage is literal text.
struct PromptTemplate {
  std::string name;
  std::string system_text;
  std::string user_text;
  std::set<std::string> placeholders;

  friend bool operator==(const PromptTemplate&, const PromptTemplate&) = default;
};

class TemplateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Placeholder names occurring in `text`, in order of first occurrence.
std::vector<std::string> placeholders_in(std::string_view text);

bool contains_placeholder(std::string_view text);

/// Declared/used consistency problems; with `require_standard`, also any
/// missing required placeholder. Empty when the template is well formed.
std::vector<std::string> template_problems(const PromptTemplate& tmpl,
                                           bool require_standard = true);

/// Parses the template file format:
///
///     name: <name>
///     placeholders: a, b, c
///     ---system
///     <system text>
///     ---user
///     <user text>
///
/// Front-matter lines starting with '#' and blank lines are ignored. Throws
/// TemplateError on syntax errors or any template_problems().
PromptTemplate parse_template(std::string_view text);
std::string serialize_template(const PromptTemplate& tmpl);
PromptTemplate load_template_file(const std::filesystem::path& path);

/// The shipped template. Stable; its serialized SHA-256 is pinned in tests
/// and in the README.
const PromptTemplate& default_template();

}  // namespace uxrank::prompt
