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

#include "uxrank/io/project_loader.hpp"

#include "uxrank/io/serialize.hpp"
#include "uxrank/util/hash.hpp"
#include "uxrank/util/strings.hpp"

namespace uxrank::io {
namespace {

std::string summarize(const std::vector<Finding>& findings) {
  std::string out = "project is invalid (" + std::to_string(findings.size()) + " finding" +
                    (findings.size() == 1 ? "" : "s") + ")";
  for (const auto& f : findings) out += "\n  " + to_string(f);
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<Finding> findings)
    : std::runtime_error(summarize(findings)), findings_(std::move(findings)) {}

std::vector<Finding> validate_project_file(const ProjectFile& file) {
  auto findings = validate_project(file.project, file.root);
  for (std::size_t i = 0; i < file.providers.size(); ++i) {
    for (const auto& problem : gateway::config_problems(file.providers[i])) {
      findings.push_back({"providers[" + std::to_string(i) + "]", problem});
    }
  }
  for (std::size_t i = 0; i < file.project.models.size(); ++i) {
    const auto& model = file.project.models[i];
    if (!model.provider.empty() && !file.provider(model.provider)) {
      findings.push_back({"models[" + std::to_string(i) + "].provider",
                          "unknown provider '" + model.provider + "'"});
    }
  }
  if (file.template_path) {
    try {
      prompt::load_template_file(file.root / *file.template_path);
    } catch (const std::exception& e) {
      findings.push_back({"template", e.what()});
    }
  }
  return findings;
}

ProjectFile load_project(const std::filesystem::path& path) {
  auto file_path = path;
  if (std::filesystem::is_directory(file_path)) file_path /= "project.json";
  std::string text;
  try {
    text = util::read_file(file_path.string());
  } catch (const std::exception& e) {
    throw SchemaError("$", e.what());
  }
  ProjectFile file = project_from_json(parse_json(text, file_path.string()));
  file.root = file_path.parent_path();
  file.digest = util::sha256_hex(text);
  auto findings = validate_project_file(file);
  if (!findings.empty()) throw ValidationError(std::move(findings));
  return file;
}

prompt::PromptTemplate project_template(const ProjectFile& file) {
  if (!file.template_path) return prompt::default_template();
  return prompt::load_template_file(file.root / *file.template_path);
}

}  // namespace uxrank::io
