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

#include "uxrank/core/validate.hpp"
#include "uxrank/io/documents.hpp"
#include "uxrank/prompt/template.hpp"

namespace uxrank::io {

/// Every validation finding of a project, not just the first.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Finding> findings);
  const std::vector<Finding>& findings() const { return findings_; }

 private:
  std::vector<Finding> findings_;
};

/// Loads `project.json` from a project directory (or the file itself),
/// validates it and resolves screenshots against its directory.
///
/// Throws SchemaError for malformed JSON or schema violations and
/// ValidationError for semantic ones.
ProjectFile load_project(const std::filesystem::path& path);

/// Findings beyond validate_project: provider keys must resolve and provider
/// configs must be sane, and the template file must load.
std::vector<Finding> validate_project_file(const ProjectFile& file);

/// The project's template, or the default one.
prompt::PromptTemplate project_template(const ProjectFile& file);

}  // namespace uxrank::io
