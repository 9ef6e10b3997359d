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

#include "uxrank/gateway/fixture_store.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "uxrank/gateway/request.hpp"
#include "uxrank/util/log.hpp"

namespace uxrank::gateway {

FixtureStore::FixtureStore(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path FixtureStore::path_for(const std::string& key) const {
  return dir_ / (key + ".txt");
}

bool FixtureStore::record(const std::string& key, const std::string& text) {
  std::lock_guard lock(mutex_);
  std::filesystem::create_directories(dir_);
  const auto path = path_for(key);
  const bool existed = std::filesystem::exists(path);
  if (existed) log::warn("fixture " + key + " already recorded; overwriting");
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out.flush()) throw std::runtime_error("cannot write fixture " + tmp);
  }
  std::filesystem::rename(tmp, path);
  return existed;
}

bool FixtureStore::record(const ChatRequest& request, const std::string& text) {
  return record(request.key(), text);
}

std::optional<std::string> FixtureStore::lookup(const std::string& key) const {
  std::lock_guard lock(mutex_);
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace uxrank::gateway
