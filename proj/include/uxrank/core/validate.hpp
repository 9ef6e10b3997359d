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
#include <span>
#include <string>
#include <vector>

#include "uxrank/core/model.hpp"

namespace uxrank {

struct Finding {
  std::string path;  ///< e.g. "tasks[2].screenshots"
  std::string message;
  friend bool operator==(const Finding&, const Finding&) = default;
};

std::string to_string(const Finding& finding);

/// Checks every structural invariant of a project and returns one finding per
/// violation. Screenshot files are resolved against `root` and must decode as
/// their declared media type. An empty result means the project is valid.
std::vector<Finding> validate_project(const EvaluationProject& project,
                                      const std::filesystem::path& root = {});

/// Reference and rating-scheme checks for assessments against a project.
/// `path_prefix` names the containing array in findings.
std::vector<Finding> validate_assessments(const EvaluationProject& project,
                                          std::span<const Assessment> assessments,
                                          const std::string& path_prefix = "assessments");

}  // namespace uxrank
