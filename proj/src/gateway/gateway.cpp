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

#include "uxrank/gateway/gateway.hpp"

#include <cstdlib>
#include <fstream>
#include <thread>

#include <json.hpp>

#include "uxrank/util/hash.hpp"
#include "uxrank/util/log.hpp"
#include "uxrank/util/strings.hpp"

namespace uxrank::gateway {
namespace {

using Kind = GatewayError::Kind;
using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point since) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - since).count();
}

}  // namespace

std::vector<std::string> config_problems(const ProviderConfig& config) {
  std::vector<std::string> problems;
  if (config.key.empty()) problems.push_back("provider key must not be empty");
  if (config.timeout.count() <= 0) problems.push_back("timeout must be positive");
  if (config.max_retries < 0) problems.push_back("max_retries must be >= 0");
  if (config.max_concurrency < 1) problems.push_back("max_concurrency must be >= 1");
  return problems;
}

std::optional<ProviderConfig> builtin_provider(std::string_view key) {
  if (key == "openai") {
    return ProviderConfig{"openai", WireProtocol::OpenAiChat, "https://api.openai.com/v1",
                          "OPENAI_API_KEY"};
  }
  if (key == "gemini") {
    return ProviderConfig{"gemini", WireProtocol::GeminiGenerate,
                          "https://generativelanguage.googleapis.com/v1beta", "GEMINI_API_KEY"};
  }
  return std::nullopt;
}

LiveProvider::LiveProvider(std::shared_ptr<HttpTransport> transport)
    : LiveProvider(std::move(transport), Options{}) {}

LiveProvider::LiveProvider(std::shared_ptr<HttpTransport> transport, Options options)
    : transport_(std::move(transport)), options_(std::move(options)), rng_(options_.seed) {
  if (!options_.env) {
    options_.env = [](const std::string& name) -> std::optional<std::string> {
      const char* value = std::getenv(name.c_str());
      if (value == nullptr) return std::nullopt;
      return std::string(value);
    };
  }
  if (!options_.sleep) {
    options_.sleep = [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };
  }
}

ChatResponse LiveProvider::complete(const ChatRequest& request, const ProviderConfig& config) {
  const auto api_key = config.credential_env.empty() ? std::nullopt
                                                     : options_.env(config.credential_env);
  if (!api_key || api_key->empty()) {
    throw GatewayError(Kind::Auth, "credential variable '" + config.credential_env +
                                       "' for provider '" + config.key + "' is not set");
  }
  const auto http = encode_request(config.protocol, config.endpoint, request, *api_key,
                                   config.timeout);
  const auto started = Clock::now();
  int retries = 0;
  bool timeout_retried = false;
  while (true) {
    try {
      HttpResponse reply;
      try {
        reply = transport_->post(http);
      } catch (const TransportError& e) {
        throw GatewayError(e.timed_out() ? Kind::Timeout : Kind::Unavailable, e.what());
      }
      auto decoded = decode_response(config.protocol, reply);
      ChatResponse response;
      response.text = std::move(decoded.text);
      response.model_id = request.model.id;
      response.latency_ms = elapsed_ms(started);
      response.token_usage = decoded.usage;
      response.retrieved_from = RetrievedFrom::Live;
      return response;
    } catch (const GatewayError& e) {
      const bool budget = retries < config.max_retries;
      bool retry = false;
      if (e.kind() == Kind::RateLimited || e.kind() == Kind::Unavailable) {
        retry = budget;
      } else if (e.kind() == Kind::Timeout) {
        retry = budget && !timeout_retried;
        timeout_retried = true;
      }
      if (!retry) throw;
      std::chrono::milliseconds delay;
      {
        std::lock_guard lock(rng_mutex_);
        delay = options_.backoff.delay(retries, rng_);
      }
      log::info(std::string(to_string(e.kind())) + " from " + config.key + ", retrying in " +
                std::to_string(delay.count()) + " ms");
      options_.sleep(delay);
      ++retries;
    }
  }
}

ReplayProvider::ReplayProvider(std::shared_ptr<const FixtureStore> store)
    : store_(std::move(store)) {}

ChatResponse ReplayProvider::complete(const ChatRequest& request, const ProviderConfig&) {
  const auto key = request.key();
  auto text = store_->lookup(key);
  if (!text) {
    throw GatewayError(Kind::ReplayMiss, "no fixture recorded for request key " + key);
  }
  ChatResponse response;
  response.text = *std::move(text);
  response.model_id = request.model.id;
  response.latency_ms = 0;
  response.retrieved_from = RetrievedFrom::Replay;
  return response;
}

Gateway::Gateway(std::shared_ptr<ChatProvider> provider)
    : Gateway(std::move(provider), Options{}) {}

Gateway::Gateway(std::shared_ptr<ChatProvider> provider, Options options)
    : provider_(std::move(provider)), options_(std::move(options)) {}

Gateway::Semaphore& Gateway::semaphore_for(const ProviderConfig& config) {
  std::lock_guard lock(semaphores_mutex_);
  auto& slot = semaphores_[config.key];
  if (!slot) {
    const auto permits = std::min<std::ptrdiff_t>(config.max_concurrency, Semaphore::max());
    slot = std::make_unique<Semaphore>(permits);
  }
  return *slot;
}

ChatResponse Gateway::complete(const ChatRequest& request, const ProviderConfig& config) {
  if (auto problems = config_problems(config); !problems.empty()) {
    throw GatewayError(Kind::Configuration,
                       "provider '" + config.key + "': " + util::join(problems, "; "));
  }
  if (request.temperature && !request.model.supports_temperature) {
    throw GatewayError(Kind::Configuration, "model '" + request.model.id +
                                                "' does not accept a temperature parameter");
  }
  if (request.temperature && !(*request.temperature >= 0.0 && *request.temperature <= 2.0)) {
    throw GatewayError(Kind::Configuration, "temperature must lie in [0, 2]");
  }

  auto& semaphore = semaphore_for(config);
  semaphore.acquire();
  ChatResponse response;
  try {
    response = provider_->complete(request, config);
  } catch (...) {
    semaphore.release();
    throw;
  }
  semaphore.release();

  response.text = std::string(util::rtrim(response.text));
  if (response.text.empty()) {
    log::warn("model '" + request.model.id + "' returned empty content for request " +
              request.key());
  }
  persist(request, response);
  return response;
}

void Gateway::persist(const ChatRequest& request, const ChatResponse& response) const {
  if (options_.record_into && response.retrieved_from == RetrievedFrom::Live) {
    options_.record_into->record(request, response.text);
  }
  if (!options_.audit_dir) return;

  nlohmann::json images = nlohmann::json::array();
  for (const auto& image : request.images) {
    images.push_back({{"media_type", to_token(image.media_type)},
                      {"sha256", util::sha256_hex(image.bytes)},
                      {"bytes", image.bytes.size()}});
  }
  nlohmann::json record = {
      {"request_key", request.key()},
      {"model", request.model.id},
      {"api_name", request.model.api_name()},
      {"system_text", request.system_text},
      {"user_text", request.user_text},
      {"images", images},
      {"temperature", request.temperature ? nlohmann::json(*request.temperature) : nullptr},
      {"response",
       {{"text", response.text},
        {"latency_ms", response.latency_ms},
        {"retrieved_from", response.retrieved_from == RetrievedFrom::Live ? "live" : "replay"}}},
  };
  if (response.token_usage) {
    record["response"]["token_usage"] = {{"prompt", response.token_usage->prompt},
                                         {"completion", response.token_usage->completion}};
  }

  std::lock_guard lock(audit_mutex_);
  std::filesystem::create_directories(*options_.audit_dir);
  std::ofstream out(*options_.audit_dir / (request.key() + ".json"), std::ios::trunc);
  out << record.dump(2) << '\n';
  if (!out) log::warn("cannot write audit record for " + request.key());
}

}  // namespace uxrank::gateway
