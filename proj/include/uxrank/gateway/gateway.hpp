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

#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <semaphore>
#include <string>
#include <vector>

#include "uxrank/gateway/backoff.hpp"
#include "uxrank/gateway/fixture_store.hpp"
#include "uxrank/gateway/request.hpp"
#include "uxrank/gateway/transport.hpp"
#include "uxrank/gateway/wire.hpp"

namespace uxrank::gateway {

struct ProviderConfig {
  std::string key;
  WireProtocol protocol = WireProtocol::OpenAiChat;
  std::string endpoint;
  /// Name of the environment variable holding the API key.
  std::string credential_env;
  std::chrono::milliseconds timeout{120000};
  int max_retries = 3;
  int max_concurrency = 4;

  friend bool operator==(const ProviderConfig&, const ProviderConfig&) = default;
};

/// Problems with a config (timeout > 0, retries >= 0, concurrency >= 1).
std::vector<std::string> config_problems(const ProviderConfig& config);

/// Built-in configs for the "openai" and "gemini" provider keys.
std::optional<ProviderConfig> builtin_provider(std::string_view key);

class ChatProvider {
 public:
  virtual ~ChatProvider() = default;
  virtual ChatResponse complete(const ChatRequest& request, const ProviderConfig& config) = 0;
};

/// Calls the provider over HTTP with the retry policy:
/// Auth, Protocol and UnsupportedModality fail immediately; RateLimited and
/// Unavailable retry with exponential backoff up to max_retries; Timeout is
/// retried at most once. Total attempts never exceed 1 + max_retries.
class LiveProvider final : public ChatProvider {
 public:
  using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;
  using Sleeper = std::function<void(std::chrono::milliseconds)>;

  struct Options {
    BackoffPolicy backoff;
    EnvLookup env;      ///< defaults to std::getenv
    Sleeper sleep;      ///< defaults to std::this_thread::sleep_for
    std::uint64_t seed = std::random_device{}();
  };

  explicit LiveProvider(std::shared_ptr<HttpTransport> transport);
  LiveProvider(std::shared_ptr<HttpTransport> transport, Options options);

  ChatResponse complete(const ChatRequest& request, const ProviderConfig& config) override;

 private:
  std::shared_ptr<HttpTransport> transport_;
  Options options_;
  std::mutex rng_mutex_;
  std::mt19937_64 rng_;
};

/// Serves recorded fixtures; never touches the network.
class ReplayProvider final : public ChatProvider {
 public:
  explicit ReplayProvider(std::shared_ptr<const FixtureStore> store);
  ChatResponse complete(const ChatRequest& request, const ProviderConfig& config) override;

 private:
  std::shared_ptr<const FixtureStore> store_;
};

/// Front door for chat completions: validates configuration and model
/// capabilities before anything is sent, bounds in-flight requests per
/// provider key, normalizes the reply text and persists each exchange.
class Gateway {
 public:
  struct Options {
    /// When set, `<request_key>.json` audit records are written here.
    std::optional<std::filesystem::path> audit_dir;
    /// When set, every successful reply is also recorded as a fixture.
    std::shared_ptr<FixtureStore> record_into;
  };

  explicit Gateway(std::shared_ptr<ChatProvider> provider);
  Gateway(std::shared_ptr<ChatProvider> provider, Options options);

  /// Thread-safe.
  ChatResponse complete(const ChatRequest& request, const ProviderConfig& config);

 private:
  using Semaphore = std::counting_semaphore<1024>;
  Semaphore& semaphore_for(const ProviderConfig& config);
  void persist(const ChatRequest& request, const ChatResponse& response) const;

  std::shared_ptr<ChatProvider> provider_;
  Options options_;
  std::mutex semaphores_mutex_;
  std::map<std::string, std::unique_ptr<Semaphore>> semaphores_;
  mutable std::mutex audit_mutex_;
};

}  // namespace uxrank::gateway
