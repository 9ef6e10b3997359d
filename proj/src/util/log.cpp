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

#include "uxrank/util/log.hpp"

#include <iostream>
#include <mutex>
#include <utility>

namespace uxrank::log {
namespace {

std::mutex& sink_mutex() {
  static std::mutex m;
  return m;
}

void default_sink(Level level, std::string_view message) {
  if (level == Level::Info) return;
  std::cerr << (level == Level::Warning ? "warning: " : "error: ") << message
            << '\n';
}

Sink& current_sink() {
  static Sink sink = default_sink;
  return sink;
}

void emit(Level level, std::string_view message) {
  std::lock_guard lock(sink_mutex());
  if (current_sink()) current_sink()(level, message);
}

}  // namespace

Sink set_sink(Sink sink) {
  std::lock_guard lock(sink_mutex());
  return std::exchange(current_sink(), std::move(sink));
}

void info(std::string_view message) { emit(Level::Info, message); }
void warn(std::string_view message) { emit(Level::Warning, message); }
void error(std::string_view message) { emit(Level::Error, message); }

}  // namespace uxrank::log
