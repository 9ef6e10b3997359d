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

#include <functional>
#include <string_view>

namespace uxrank::log {

enum class Level { Info, Warning, Error };

using Sink = std::function<void(Level, std::string_view)>;

/// Replaces the process-wide sink and returns the previous one. The default
/// sink writes warnings and errors to stderr and drops info messages.
Sink set_sink(Sink sink);

void info(std::string_view message);
void warn(std::string_view message);
void error(std::string_view message);

}  // namespace uxrank::log
