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

#include <optional>
#include <string>
#include <string_view>

#include "uxrank/gateway/request.hpp"
#include "uxrank/gateway/transport.hpp"

namespace uxrank::gateway {

/// The two supported wire protocols.
enum class WireProtocol {
  OpenAiChat,      ///< POST {endpoint}/chat/completions
  GeminiGenerate,  ///< POST {endpoint}/models/{model}:generateContent
};

std::string_view to_token(WireProtocol protocol);
std::optional<WireProtocol> protocol_from_token(std::string_view token);

struct DecodedReply {
  std::string text;
  std::optional<TokenUsage> usage;
};

/// Builds the provider HTTP request. Images are sent inline as base64.
HttpRequest encode_request(WireProtocol protocol, const std::string& endpoint,
                           const ChatRequest& request, const std::string& api_key,
                           std::chrono::milliseconds timeout);

/// Interprets a provider HTTP response. Non-2xx statuses and malformed
/// bodies throw GatewayError of the matching kind.
DecodedReply decode_response(WireProtocol protocol, const HttpResponse& response);

}  // namespace uxrank::gateway
