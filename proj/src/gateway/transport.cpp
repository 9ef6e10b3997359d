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

#include "uxrank/gateway/transport.hpp"

#include <atomic>
#include <regex>

#include <httplib.h>

namespace uxrank::gateway {
namespace {
std::atomic<std::int64_t> g_attempts{0};
}  // namespace

std::int64_t network_attempts() { return g_attempts.load(); }

HttpResponse HttplibTransport::post(const HttpRequest& request) {
  static const std::regex url_re(R"(^(https?://[^/]+)(/.*)?$)");
  std::smatch m;
  if (!std::regex_match(request.url, m, url_re)) {
    throw TransportError(false, "malformed URL: " + request.url);
  }
  const std::string origin = m[1].str();
  const std::string path = m[2].matched ? m[2].str() : "/";

  ++g_attempts;
  httplib::Client client(origin);
  client.set_connection_timeout(request.timeout);
  client.set_read_timeout(request.timeout);
  client.set_write_timeout(request.timeout);

  httplib::Headers headers;
  std::string content_type = "application/json";
  for (const auto& [name, value] : request.headers) {
    if (name == "Content-Type") {
      content_type = value;
    } else {
      headers.emplace(name, value);
    }
  }
  auto result = client.Post(path, headers, request.body, content_type);
  if (!result) {
    const auto err = result.error();
    const bool timed_out = err == httplib::Error::ConnectionTimeout || err == httplib::Error::Read;
    throw TransportError(timed_out, "POST " + origin + path + ": " + httplib::to_string(err));
  }
  return HttpResponse{result->status, result->body};
}

}  // namespace uxrank::gateway
