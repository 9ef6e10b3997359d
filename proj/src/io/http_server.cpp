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

#include "uxrank/io/http_server.hpp"

#include <httplib.h>

namespace uxrank::io {

ReviewServer::ReviewServer(std::shared_ptr<ReviewService> service,
                           std::optional<std::filesystem::path> ui_dir)
    : service_(std::move(service)), server_(std::make_unique<httplib::Server>()) {
  auto handler = [service = service_](const httplib::Request& req, httplib::Response& res) {
    const auto reply = service->handle(req.method, req.path, req.body);
    res.status = reply.status;
    res.set_content(reply.body, reply.content_type);
  };
  server_->Get(R"(/api/.*)", handler);
  server_->Post(R"(/api/.*)", handler);
  if (ui_dir && !server_->set_mount_point("/", ui_dir->string())) {
    throw std::runtime_error("cannot serve UI directory " + ui_dir->string());
  }
}

ReviewServer::~ReviewServer() { stop(); }

int ReviewServer::bind(const std::string& host, int port) {
  if (port == 0) {
    const int bound = server_->bind_to_any_port(host);
    if (bound < 0) throw std::runtime_error("cannot bind " + host);
    return bound;
  }
  if (!server_->bind_to_port(host, port)) {
    throw std::runtime_error("cannot bind " + host + ":" + std::to_string(port));
  }
  return port;
}

void ReviewServer::run() {
  server_->listen_after_bind();
  service_->flush();
}

void ReviewServer::stop() {
  if (server_->is_running()) server_->stop();
}

}  // namespace uxrank::io
