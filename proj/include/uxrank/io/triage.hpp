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
#include <fstream>
#include <mutex>
#include <span>
#include <vector>

#include "uxrank/io/documents.hpp"

namespace uxrank::io {

/// `<report>.triage.jsonl` next to the report.
std::filesystem::path journal_path_for(const std::filesystem::path& report_path);

/// All entries of a journal in file order; a missing file reads as empty.
/// Throws SchemaError naming the line of a malformed entry.
std::vector<TriageDecision> read_journal(const std::filesystem::path& path);

/// One line per decision.
std::string serialize_journal(std::span<const TriageDecision> decisions);

/// Latest decision per (task, criterion), ordered by task id then criterion
/// id (task-level first).
std::vector<TriageDecision> latest_decisions(std::span<const TriageDecision> decisions);

/// Append-only JSON-lines journal. append() is serialized and flushed before
/// it returns.
class TriageJournal {
 public:
  explicit TriageJournal(std::filesystem::path path);

  const std::filesystem::path& path() const { return path_; }

  /// Throws std::runtime_error when the line cannot be written.
  void append(const TriageDecision& decision);
  std::vector<TriageDecision> entries() const;
  std::vector<TriageDecision> latest() const;
  void flush();

 private:
  std::filesystem::path path_;
  mutable std::mutex mutex_;
  std::ofstream out_;
};

}  // namespace uxrank::io
