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

#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace uxrank::io {

using nlohmann::json;

/// Schema violation at a JSON path such as `$.tasks[1].screenshots`.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Strict reader for one JSON object: every key must be consumed through
/// required()/optional() before finish(), otherwise the first unknown key is
/// reported.
class ObjectReader {
 public:
  ObjectReader(const json& value, std::string path);

  const json& required(const std::string& key);
  const json* optional(const std::string& key);

  std::string string(const std::string& key);
  std::optional<std::string> optional_string(const std::string& key);
  int integer(const std::string& key);
  std::optional<int> optional_integer(const std::string& key);
  std::optional<double> optional_number(const std::string& key);
  bool boolean(const std::string& key);

  std::string path_of(const std::string& key) const { return path_ + "." + key; }
  const std::string& path() const { return path_; }

  void finish() const;

 private:
  const json& value_;
  std::string path_;
  std::set<std::string> consumed_;
};

const json& expect_array(const json& value, const std::string& path);
std::string expect_string(const json& value, const std::string& path);
std::string index_path(const std::string& path, std::size_t i);

/// Parses text as JSON, reporting syntax errors as SchemaError at `$`.
json parse_json(const std::string& text, const std::string& source);

}  // namespace uxrank::io
