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

#include <atomic>
#include <filesystem>
#include <functional>
#include <mutex>
#include <random>
#include <string>

#include "uxrank/core/model.hpp"
#include "uxrank/util/log.hpp"

namespace testing {

inline std::filesystem::path testdata() { return UXRANK_TESTDATA_DIR; }
inline std::filesystem::path quizapp() { return testdata() / "quizapp"; }

/// Fresh empty directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("uxrank-test-" + std::to_string(rd()) + "-" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

/// Silences the process log for the lifetime of the guard.
class QuietLog {
 public:
  QuietLog() : previous_(uxrank::log::set_sink([](uxrank::log::Level, std::string_view) {})) {}
  ~QuietLog() { uxrank::log::set_sink(previous_); }

 private:
  uxrank::log::Sink previous_;
};

inline uxrank::Assessment make_assessment(std::string task, std::string criterion,
                                          uxrank::RaterId rater, uxrank::Rating rating,
                                          std::optional<std::string> screenshot = std::nullopt) {
  uxrank::Assessment a;
  a.task_id = std::move(task);
  a.criterion_id = std::move(criterion);
  a.rater = std::move(rater);
  a.rating = rating;
  a.screenshot_id = std::move(screenshot);
  a.explanation = "because";
  return a;
}

}  // namespace testing
