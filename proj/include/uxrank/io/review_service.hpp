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
#include <memory>
#include <string>
#include <string_view>

#include "uxrank/io/documents.hpp"
#include "uxrank/io/triage.hpp"

namespace uxrank::io {

struct HttpReply {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

/// The REST interface of the review UI, independent of any HTTP server:
///
///   GET  /api/report             the report file as stored
///   GET  /api/project            the project document
///   GET  /api/screenshots/{id}   image bytes with their content type
///   GET  /api/triage             latest decision per (task, criterion)
///   POST /api/triage             201 on success, 400 malformed, 422 unknown reference
///
/// Thread-safe.
class ReviewService {
 public:
  /// Throws SchemaError when the report does not load.
  ReviewService(ProjectFile project, const std::filesystem::path& report_path);

  HttpReply handle(std::string_view method, std::string_view path, std::string_view body);

  const EvaluationReport& report() const { return report_; }
  TriageJournal& journal() { return journal_; }
  void flush() { journal_.flush(); }

 private:
  HttpReply post_triage(std::string_view body);
  HttpReply screenshot(std::string_view id) const;

  ProjectFile project_;
  std::string report_bytes_;
  EvaluationReport report_;
  TriageJournal journal_;
};

}  // namespace uxrank::io
