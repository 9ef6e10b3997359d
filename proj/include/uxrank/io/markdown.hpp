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

#include <string>

#include "uxrank/io/documents.hpp"

namespace uxrank::io {

/// Human-readable report: for each model one section per task in severity
/// order with rank, score, screenshots and the per-criterion ratings and
/// explanations. Tied tasks share a rank label. A warnings appendix is added
/// only when the report has warnings. Output depends on the report alone.
std::string render_markdown(const EvaluationReport& report);

}  // namespace uxrank::io
