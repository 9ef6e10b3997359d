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

#include <vector>

#include "uxrank/core/model.hpp"

namespace uxrank {

/// Built-in criterion catalog: the ten Nielsen heuristics ("nielsen-01" ..
/// "nielsen-10") or the four cognitive-walkthrough questions ("cw-01" ..
/// "cw-04"), in canonical order. Pure; repeated calls return equal lists.
const std::vector<Criterion>& builtin_criteria(EvalMethod method);

}  // namespace uxrank
