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

#include "uxrank/gateway/wire.hpp"

#include <json.hpp>

#include "uxrank/util/hash.hpp"
#include "uxrank/util/strings.hpp"

namespace uxrank::gateway {
namespace {

using nlohmann::json;
using Kind = GatewayError::Kind;

std::string data_url(const ImagePart& image) {
  return "data:" + std::string(mime_type(image.media_type)) + ";base64," +
         util::base64_encode(image.bytes);
}

json openai_body(const ChatRequest& request) {
  json content = json::array();
  content.push_back({{"type", "text"}, {"text", request.user_text}});
  for (const auto& image : request.images) {
    content.push_back({{"type", "image_url"}, {"image_url", {{"url", data_url(image)}}}});
  }
  json body = {
      {"model", request.model.api_name()},
      {"messages", json::array({
                       {{"role", "system"}, {"content", request.system_text}},
                       {{"role", "user"}, {"content", std::move(content)}},
                   })},
  };
  if (request.temperature) body["temperature"] = *request.temperature;
  return body;
}

json gemini_body(const ChatRequest& request) {
  json parts = json::array();
  parts.push_back({{"text", request.user_text}});
  for (const auto& image : request.images) {
    parts.push_back({{"inline_data",
                      {{"mime_type", std::string(mime_type(image.media_type))},
                       {"data", util::base64_encode(image.bytes)}}}});
  }
  json body = {
      {"systemInstruction", {{"parts", json::array({{{"text", request.system_text}}})}}},
      {"contents", json::array({{{"role", "user"}, {"parts", std::move(parts)}}})},
  };
  if (request.temperature) body["generationConfig"] = {{"temperature", *request.temperature}};
  return body;
}

std::string error_message(const json& body) {
  // Both vendors wrap errors as {"error": {"message": ...}}.
  if (body.is_object() && body.contains("error")) {
    const auto& err = body["error"];
    if (err.is_object() && err.contains("message") && err["message"].is_string()) {
      return err["message"].get<std::string>();
    }
    if (err.is_string()) return err.get<std::string>();
  }
  return {};
}

[[noreturn]] void raise_for_status(const HttpResponse& response, const json& body) {
  auto message = error_message(body);
  if (message.empty()) message = response.body.substr(0, 200);
  const auto what = "HTTP " + std::to_string(response.status) + ": " + message;
  const auto lower = util::to_lower(message);
  switch (response.status) {
    case 401:
    case 403:
      throw GatewayError(Kind::Auth, what);
    case 429:
      throw GatewayError(Kind::RateLimited, what);
    case 408:
    case 504:
      throw GatewayError(Kind::Timeout, what);
    default:
      break;
  }
  if (response.status >= 500) throw GatewayError(Kind::Unavailable, what);
  if (response.status == 400 || response.status == 415 || response.status == 422) {
    if (lower.find("image") != std::string::npos || lower.find("modalit") != std::string::npos ||
        lower.find("inline_data") != std::string::npos) {
      throw GatewayError(Kind::UnsupportedModality, what);
    }
  }
  throw GatewayError(Kind::Protocol, what);
}

std::int64_t count(const json& obj, const char* key) {
  return obj.contains(key) && obj[key].is_number_integer() ? obj[key].get<std::int64_t>() : 0;
}

DecodedReply decode_openai(const json& body) {
  if (!body.contains("choices") || !body["choices"].is_array() || body["choices"].empty()) {
    throw GatewayError(Kind::Protocol, "reply has no choices");
  }
  const auto& choice = body["choices"][0];
  if (!choice.is_object() || !choice.contains("message") || !choice["message"].is_object()) {
    throw GatewayError(Kind::Protocol, "reply choice has no message");
  }
  const auto& message = choice["message"];
  DecodedReply out;
  if (message.contains("content") && message["content"].is_string()) {
    out.text = message["content"].get<std::string>();
  } else if (message.contains("content") && !message["content"].is_null()) {
    throw GatewayError(Kind::Protocol, "message content is not a string");
  }
  if (body.contains("usage") && body["usage"].is_object()) {
    const auto& usage = body["usage"];
    out.usage = TokenUsage{count(usage, "prompt_tokens"), count(usage, "completion_tokens")};
  }
  return out;
}

DecodedReply decode_gemini(const json& body) {
  if (!body.contains("candidates") || !body["candidates"].is_array() ||
      body["candidates"].empty()) {
    std::string reason;
    if (body.contains("promptFeedback") && body["promptFeedback"].contains("blockReason")) {
      reason = " (blocked: " + body["promptFeedback"]["blockReason"].dump() + ")";
    }
    throw GatewayError(Kind::Protocol, "reply has no candidates" + reason);
  }
  const auto& candidate = body["candidates"][0];
  DecodedReply out;
  if (candidate.contains("content") && candidate["content"].contains("parts")) {
    for (const auto& part : candidate["content"]["parts"]) {
      if (part.contains("text") && part["text"].is_string()) {
        out.text += part["text"].get<std::string>();
      }
    }
  } else if (candidate.contains("finishReason") && candidate["finishReason"] != "STOP") {
    throw GatewayError(Kind::Protocol,
                       "candidate has no content, finishReason " + candidate["finishReason"].dump());
  }
  if (body.contains("usageMetadata") && body["usageMetadata"].is_object()) {
    const auto& usage = body["usageMetadata"];
    out.usage = TokenUsage{count(usage, "promptTokenCount"), count(usage, "candidatesTokenCount")};
  }
  return out;
}

std::string trim_slash(std::string s) {
  while (!s.empty() && s.back() == '/') s.pop_back();
  return s;
}

}  // namespace

std::string_view to_token(WireProtocol protocol) {
  return protocol == WireProtocol::OpenAiChat ? "openai-chat" : "gemini-generate";
}

std::optional<WireProtocol> protocol_from_token(std::string_view token) {
  if (token == "openai-chat") return WireProtocol::OpenAiChat;
  if (token == "gemini-generate") return WireProtocol::GeminiGenerate;
  return std::nullopt;
}

HttpRequest encode_request(WireProtocol protocol, const std::string& endpoint,
                           const ChatRequest& request, const std::string& api_key,
                           std::chrono::milliseconds timeout) {
  HttpRequest http;
  http.timeout = timeout;
  http.headers["Content-Type"] = "application/json";
  if (protocol == WireProtocol::OpenAiChat) {
    http.url = trim_slash(endpoint) + "/chat/completions";
    http.headers["Authorization"] = "Bearer " + api_key;
    http.body = openai_body(request).dump();
  } else {
    http.url = trim_slash(endpoint) + "/models/" + request.model.api_name() + ":generateContent";
    http.headers["x-goog-api-key"] = api_key;
    http.body = gemini_body(request).dump();
  }
  return http;
}

DecodedReply decode_response(WireProtocol protocol, const HttpResponse& response) {
  const auto body = json::parse(response.body, nullptr, false);
  if (response.status < 200 || response.status >= 300) raise_for_status(response, body);
  if (body.is_discarded() || !body.is_object()) {
    throw GatewayError(Kind::Protocol, "reply is not a JSON object");
  }
  return protocol == WireProtocol::OpenAiChat ? decode_openai(body) : decode_gemini(body);
}

}  // namespace uxrank::gateway
