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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "uxrank/core/model.hpp"
#include "uxrank/prompt/builder.hpp"

namespace uxrank::gateway {

using prompt::ImagePart;

struct ChatRequest {
  ModelSpec model;
  std::string system_text;
  std::string user_text;
  std::vector<ImagePart> images;
  std::optional<double> temperature;

  /// Content hash (SHA-256 hex) over the model id, both texts, the media type
  /// and digest of every image, and the temperature. Provider configuration
  /// and other ModelSpec fields do not participate.
  std::string key() const;
};

/// Request for a prompt bundle with the model's effective temperature.
ChatRequest make_request(const ModelSpec& model, const prompt::PromptBundle& bundle);

struct TokenUsage {
  std::int64_t prompt = 0;
  std::int64_t completion = 0;
  friend bool operator==(const TokenUsage&, const TokenUsage&) = default;
};

enum class RetrievedFrom { Live, Replay };

struct ChatResponse {
  std::string text;
  std::string model_id;
  std::int64_t latency_ms = 0;
  std::optional<TokenUsage> token_usage;
  RetrievedFrom retrieved_from = RetrievedFrom::Live;
};

class GatewayError : public std::runtime_error {
 public:
  enum class Kind {
    Configuration,        ///< invalid config or capability violation; nothing sent
    Auth,                 ///< missing or rejected credential; never retried
    RateLimited,          ///< retried with backoff, then surfaced
    Timeout,              ///< retried once, then surfaced
    Unavailable,          ///< connection failure or 5xx; retried like RateLimited
    UnsupportedModality,  ///< provider rejected the image input
    Protocol,             ///< malformed or unexpected provider reply
    ReplayMiss,           ///< no recorded fixture for the request key
  };

  GatewayError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

std::string_view to_string(GatewayError::Kind kind);

}  // namespace uxrank::gateway
