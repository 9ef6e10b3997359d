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

#include "uxrank/io/triage.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "uxrank/io/serialize.hpp"

namespace uxrank::io {

std::filesystem::path journal_path_for(const std::filesystem::path& report_path) {
  auto p = report_path;
  p += ".triage.jsonl";
  return p;
}

std::vector<TriageDecision> read_journal(const std::filesystem::path& path) {
  std::vector<TriageDecision> out;
  std::ifstream in(path, std::ios::binary);
  if (!in) return out;
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto where = path.filename().string() + ":" + std::to_string(n);
    out.push_back(triage_from_json(parse_json(line, where), where));
  }
  return out;
}

std::string serialize_journal(std::span<const TriageDecision> decisions) {
  std::string out;
  for (const auto& d : decisions) out += to_json(d).dump() + "\n";
  return out;
}

std::vector<TriageDecision> latest_decisions(std::span<const TriageDecision> decisions) {
  std::map<std::pair<std::string, std::optional<std::string>>, TriageDecision> latest;
  for (const auto& d : decisions) latest.insert_or_assign({d.task_id, d.criterion_id}, d);
  std::vector<TriageDecision> out;
  for (auto& [_, d] : latest) out.push_back(std::move(d));
  return out;
}

TriageJournal::TriageJournal(std::filesystem::path path) : path_(std::move(path)) {}

void TriageJournal::append(const TriageDecision& decision) {
  const auto line = to_json(decision).dump() + "\n";
  std::lock_guard lock(mutex_);
  if (!out_.is_open()) {
    out_.open(path_, std::ios::binary | std::ios::app);
    if (!out_) throw std::runtime_error("cannot open triage journal " + path_.string());
  }
  out_ << line;
  out_.flush();
  if (!out_) {
    out_.close();
    out_.clear();
    throw std::runtime_error("cannot write triage journal " + path_.string());
  }
}

std::vector<TriageDecision> TriageJournal::entries() const {
  std::lock_guard lock(mutex_);
  return read_journal(path_);
}

std::vector<TriageDecision> TriageJournal::latest() const {
  const auto all = entries();
  return latest_decisions(all);
}

void TriageJournal::flush() {
  std::lock_guard lock(mutex_);
  if (out_.is_open()) out_.flush();
}

}  // namespace uxrank::io
