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

#include "uxrank/gateway/request.hpp"

#include <cstdio>

#include "uxrank/util/hash.hpp"

namespace uxrank::gateway {
namespace {

// Length-prefixed fields keep the encoding unambiguous.
void field(util::Sha256& h, std::string_view bytes) {
  h.update(std::to_string(bytes.size()));
  h.update(":");
  h.update(bytes);
}

}  // namespace

std::string ChatRequest::key() const {
  util::Sha256 h;
  field(h, "uxrank-chat-request/1");
  field(h, model.id);
  field(h, system_text);
  field(h, user_text);
  field(h, std::to_string(images.size()));
  for (const auto& image : images) {
    field(h, to_token(image.media_type));
    field(h, util::sha256_hex(image.bytes));
  }
  if (temperature) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", *temperature);
    field(h, buf);
  } else {
    field(h, "none");
  }
  return h.hex_digest();
}

ChatRequest make_request(const ModelSpec& model, const prompt::PromptBundle& bundle) {
  return ChatRequest{model, bundle.system_text, bundle.user_text, bundle.images,
                     model.effective_temperature()};
}

std::string_view to_string(GatewayError::Kind kind) {
  switch (kind) {
    case GatewayError::Kind::Configuration: return "ConfigurationError";
    case GatewayError::Kind::Auth: return "AuthError";
    case GatewayError::Kind::RateLimited: return "RateLimited";
    case GatewayError::Kind::Timeout: return "Timeout";
    case GatewayError::Kind::Unavailable: return "Unavailable";
    case GatewayError::Kind::UnsupportedModality: return "UnsupportedModality";
    case GatewayError::Kind::Protocol: return "ProtocolError";
    case GatewayError::Kind::ReplayMiss: return "ReplayMiss";
  }
  return "GatewayError";
}

}  // namespace uxrank::gateway
