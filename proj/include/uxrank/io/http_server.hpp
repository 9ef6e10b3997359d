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
#include <optional>
#include <string>

#include "uxrank/io/review_service.hpp"

namespace httplib {
class Server;
}

namespace uxrank::io {

/// Serves a ReviewService over HTTP, plus static files of the review UI
/// under `/` when a directory is given.
class ReviewServer {
 public:
  ReviewServer(std::shared_ptr<ReviewService> service,
               std::optional<std::filesystem::path> ui_dir = std::nullopt);
  ~ReviewServer();

  /// Binds to host:port (port 0 picks a free port) and returns the port.
  /// Throws std::runtime_error on bind failure.
  int bind(const std::string& host, int port);

  /// Blocks serving requests until stop(); flushes the journal on return.
  void run();
  void stop();

 private:
  std::shared_ptr<ReviewService> service_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace uxrank::io
