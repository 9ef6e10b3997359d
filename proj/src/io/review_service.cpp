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

#include "uxrank/io/review_service.hpp"

#include <algorithm>

#include "uxrank/io/serialize.hpp"
#include "uxrank/util/log.hpp"
#include "uxrank/util/strings.hpp"

namespace uxrank::io {
namespace {

HttpReply error_reply(int status, const std::string& message) {
  return {status, "application/json", json{{"error", message}}.dump()};
}

constexpr std::string_view kScreenshotPrefix = "/api/screenshots/";

}  // namespace

ReviewService::ReviewService(ProjectFile project, const std::filesystem::path& report_path)
    : project_(std::move(project)),
      report_bytes_(util::read_file(report_path.string())),
      report_(report_from_json(parse_json(report_bytes_, report_path.string()))),
      journal_(journal_path_for(report_path)) {
  if (report_.project_digest != project_.digest) {
    log::warn("report " + report_path.string() + " was produced from a different project file");
  }
}

HttpReply ReviewService::handle(std::string_view method, std::string_view path,
                                std::string_view body) {
  try {
    if (path == "/api/triage") {
      if (method == "POST") return post_triage(body);
      if (method == "GET") {
        const auto latest = journal_.latest();
        json out = json::array();
        for (const auto& d : latest) out.push_back(to_json(d));
        return {200, "application/json", out.dump()};
      }
      return error_reply(405, "method not allowed");
    }
    const bool known = path == "/api/report" || path == "/api/project" ||
                       path.starts_with(kScreenshotPrefix);
    if (!known) return error_reply(404, "no such resource");
    if (method != "GET") return error_reply(405, "method not allowed");
    if (path == "/api/report") return {200, "application/json", report_bytes_};
    if (path == "/api/project") return {200, "application/json", to_json(project_).dump()};
    return screenshot(path.substr(kScreenshotPrefix.size()));
  } catch (const std::exception& e) {
    return error_reply(500, e.what());
  }
}

HttpReply ReviewService::post_triage(std::string_view body) {
  TriageDecision decision;
  try {
    decision = triage_from_json(parse_json(std::string(body), "request body"), "$");
  } catch (const SchemaError& e) {
    return error_reply(400, e.what());
  }
  const auto& tasks = report_.manifest.tasks;
  if (std::none_of(tasks.begin(), tasks.end(), [&](const auto& t) { return t.id == decision.task_id; })) {
    return error_reply(422, "unknown task '" + decision.task_id + "'");
  }
  if (decision.criterion_id) {
    const auto& criteria = report_.manifest.criteria;
    if (std::none_of(criteria.begin(), criteria.end(),
                     [&](const auto& c) { return c.id == *decision.criterion_id; })) {
      return error_reply(422, "unknown criterion '" + *decision.criterion_id + "'");
    }
  }
  if (decision.decided_at.empty()) decision.decided_at = util::utc_timestamp();
  try {
    journal_.append(decision);
  } catch (const std::exception& e) {
    return error_reply(500, e.what());
  }
  return {201, "application/json", to_json(decision).dump()};
}

HttpReply ReviewService::screenshot(std::string_view id) const {
  const auto* shot = project_.project.find_screenshot(id);
  if (shot == nullptr) return error_reply(404, "unknown screenshot '" + std::string(id) + "'");
  const auto file = project_.root / shot->path;
  try {
    return {200, std::string(mime_type(shot->media_type)), util::read_file(file.string())};
  } catch (const std::exception& e) {
    return error_reply(500, e.what());
  }
}

}  // namespace uxrank::io
