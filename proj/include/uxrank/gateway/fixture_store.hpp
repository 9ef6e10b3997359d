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
#include <mutex>
#include <optional>
#include <string>

namespace uxrank::gateway {

struct ChatRequest;

/// Directory of canned responses, one file `<request_key>.txt` per request,
/// holding the raw response text. Writes are serialized.
class FixtureStore {
 public:
  explicit FixtureStore(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const std::string& key) const;

  /// Stores `text` under `key`. An existing fixture is replaced (with a
  /// logged warning); returns true in that case.
  bool record(const std::string& key, const std::string& text);
  bool record(const ChatRequest& request, const std::string& text);

  std::optional<std::string> lookup(const std::string& key) const;

 private:
  std::filesystem::path dir_;
  mutable std::mutex mutex_;
};

}  // namespace uxrank::gateway
