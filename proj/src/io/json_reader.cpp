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

#include "uxrank/io/json_reader.hpp"

#include <limits>

namespace uxrank::io {
namespace {
std::string type_name(const json& v) { return v.type_name(); }
}  // namespace

ObjectReader::ObjectReader(const json& value, std::string path)
    : value_(value), path_(std::move(path)) {
  if (!value_.is_object()) throw SchemaError(path_, "expected object, got " + type_name(value_));
}

const json& ObjectReader::required(const std::string& key) {
  consumed_.insert(key);
  auto it = value_.find(key);
  if (it == value_.end()) throw SchemaError(path_of(key), "required field is missing");
  return *it;
}

const json* ObjectReader::optional(const std::string& key) {
  consumed_.insert(key);
  auto it = value_.find(key);
  if (it == value_.end() || it->is_null()) return nullptr;
  return &*it;
}

std::string ObjectReader::string(const std::string& key) {
  return expect_string(required(key), path_of(key));
}

std::optional<std::string> ObjectReader::optional_string(const std::string& key) {
  const auto* v = optional(key);
  if (v == nullptr) return std::nullopt;
  return expect_string(*v, path_of(key));
}

int ObjectReader::integer(const std::string& key) {
  const auto& v = required(key);
  if (!v.is_number_integer()) throw SchemaError(path_of(key), "expected integer, got " + type_name(v));
  const auto i = v.get<long long>();
  if (i < std::numeric_limits<int>::min() || i > std::numeric_limits<int>::max()) {
    throw SchemaError(path_of(key), "integer out of range");
  }
  return static_cast<int>(i);
}

std::optional<int> ObjectReader::optional_integer(const std::string& key) {
  if (optional(key) == nullptr) return std::nullopt;
  return integer(key);
}

std::optional<double> ObjectReader::optional_number(const std::string& key) {
  const auto* v = optional(key);
  if (v == nullptr) return std::nullopt;
  if (!v->is_number()) throw SchemaError(path_of(key), "expected number, got " + type_name(*v));
  return v->get<double>();
}

bool ObjectReader::boolean(const std::string& key) {
  const auto& v = required(key);
  if (!v.is_boolean()) throw SchemaError(path_of(key), "expected boolean, got " + type_name(v));
  return v.get<bool>();
}

void ObjectReader::finish() const {
  for (const auto& [key, _] : value_.items()) {
    if (!consumed_.contains(key)) throw SchemaError(path_of(key), "unknown field '" + key + "'");
  }
}

const json& expect_array(const json& value, const std::string& path) {
  if (!value.is_array()) throw SchemaError(path, "expected array, got " + type_name(value));
  return value;
}

std::string expect_string(const json& value, const std::string& path) {
  if (!value.is_string()) throw SchemaError(path, "expected string, got " + type_name(value));
  return value.get<std::string>();
}

std::string index_path(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("$", source + " is not valid JSON: " + e.what());
  }
}

}  // namespace uxrank::io
