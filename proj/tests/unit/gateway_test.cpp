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

#include <doctest.h>

#include <atomic>
#include <deque>
#include <fstream>
#include <thread>

#include <json.hpp>

#include "support/fixtures.hpp"
#include "uxrank/gateway/gateway.hpp"

using namespace uxrank;
using namespace uxrank::gateway;
using Kind = GatewayError::Kind;

namespace {

// Replays a script of HTTP outcomes; a status of -1 throws a timeout and -2 a
// connection failure.
class ScriptedTransport : public HttpTransport {
 public:
  explicit ScriptedTransport(std::deque<HttpResponse> script) : script_(std::move(script)) {}

  HttpResponse post(const HttpRequest& request) override {
    std::lock_guard lock(mutex_);
    ++calls;
    last = request;
    if (script_.empty()) return ok("{\"grade\": 1, \"explanation\": \"fine\"}");
    auto next = script_.front();
    script_.pop_front();
    if (next.status == -1) throw TransportError(true, "timed out");
    if (next.status == -2) throw TransportError(false, "connection refused");
    return next;
  }

  static HttpResponse ok(const std::string& text) {
    return {200, nlohmann::json{{"choices", {{{"message", {{"content", text}}}}}}}.dump()};
  }

  int calls = 0;
  HttpRequest last;

 private:
  std::mutex mutex_;
  std::deque<HttpResponse> script_;
};

ChatRequest request(bool supports_temperature = true) {
  ChatRequest r;
  r.model = ModelSpec{"m", "test", "", std::nullopt, supports_temperature, ""};
  r.system_text = "s";
  r.user_text = "u";
  r.temperature = supports_temperature ? std::optional<double>(0.0) : std::nullopt;
  return r;
}

ProviderConfig config(int max_retries = 3) {
  ProviderConfig c;
  c.key = "test";
  c.protocol = WireProtocol::OpenAiChat;
  c.endpoint = "http://unused.invalid";
  c.credential_env = "TEST_KEY";
  c.max_retries = max_retries;
  return c;
}

struct Harness {
  std::shared_ptr<ScriptedTransport> transport;
  std::vector<std::chrono::milliseconds> sleeps;
  std::shared_ptr<LiveProvider> provider;

  explicit Harness(std::deque<HttpResponse> script, bool with_key = true)
      : transport(std::make_shared<ScriptedTransport>(std::move(script))) {
    LiveProvider::Options options;
    options.env = [with_key](const std::string&) -> std::optional<std::string> {
      if (with_key) return std::string("secret");
      return std::nullopt;
    };
    options.sleep = [this](std::chrono::milliseconds d) { sleeps.push_back(d); };
    options.seed = 1;
    provider = std::make_shared<LiveProvider>(transport, options);
  }
};

Kind kind_of(Gateway& gw, const ChatRequest& r, const ProviderConfig& c) {
  try {
    gw.complete(r, c);
  } catch (const GatewayError& e) {
    return e.kind();
  }
  FAIL("expected GatewayError");
  return Kind::Protocol;
}

}  // namespace

TEST_CASE("rate limits are retried with growing backoff") {
  testing::QuietLog quiet;
  Harness h({{429, ""}, {429, ""}, ScriptedTransport::ok("  {\"grade\": 2}  \n")});
  Gateway gw(h.provider);
  const auto response = gw.complete(request(), config());
  CHECK(response.text == "  {\"grade\": 2}");
  CHECK(response.retrieved_from == RetrievedFrom::Live);
  CHECK(h.transport->calls == 3);
  REQUIRE(h.sleeps.size() == 2);
  CHECK(h.sleeps[1] > h.sleeps[0]);
  CHECK(h.transport->last.headers.at("Authorization") == "Bearer secret");
}

TEST_CASE("attempts never exceed one plus max_retries") {
  testing::QuietLog quiet;
  for (int max_retries : {0, 1, 3}) {
    Harness h({{429, ""}, {503, ""}, {-2, ""}, {429, ""}, {429, ""}});
    Gateway gw(h.provider);
    const auto kind = kind_of(gw, request(), config(max_retries));
    CHECK(h.transport->calls == 1 + max_retries);
    CHECK((kind == Kind::RateLimited || kind == Kind::Unavailable));
  }
}

TEST_CASE("timeouts are retried once") {
  testing::QuietLog quiet;
  Harness twice({{-1, ""}, {-1, ""}, ScriptedTransport::ok("x")});
  Gateway gw(twice.provider);
  CHECK(kind_of(gw, request(), config()) == Kind::Timeout);
  CHECK(twice.transport->calls == 2);

  Harness once({{504, ""}, ScriptedTransport::ok("x")});
  Gateway gw2(once.provider);
  CHECK(gw2.complete(request(), config()).text == "x");
  CHECK(once.transport->calls == 2);
}

TEST_CASE("auth, modality and protocol failures are not retried") {
  testing::QuietLog quiet;
  const std::vector<std::pair<HttpResponse, Kind>> cases = {
      {{401, ""}, Kind::Auth},
      {{400, R"({"error":{"message":"images not supported"}})"}, Kind::UnsupportedModality},
      {{200, "garbage"}, Kind::Protocol},
  };
  for (const auto& [reply, kind] : cases) {
    Harness h({reply});
    Gateway gw(h.provider);
    CHECK(kind_of(gw, request(), config()) == kind);
    CHECK(h.transport->calls == 1);
  }
}

TEST_CASE("nothing is sent without a credential") {
  Harness h({}, false);
  Gateway gw(h.provider);
  CHECK(kind_of(gw, request(), config()) == Kind::Auth);
  CHECK(h.transport->calls == 0);
}

TEST_CASE("capability and configuration guards run before the network") {
  Harness h({});
  Gateway gw(h.provider);
  auto r = request(false);
  r.temperature = 0.3;
  CHECK(kind_of(gw, r, config()) == Kind::Configuration);

  auto hot = request();
  hot.temperature = 3.0;
  CHECK(kind_of(gw, hot, config()) == Kind::Configuration);

  auto bad = config();
  bad.max_concurrency = 0;
  CHECK(kind_of(gw, request(), bad) == Kind::Configuration);
  CHECK(h.transport->calls == 0);

  CHECK(gw.complete(request(false), config()).text.size() > 0);
  const auto body = nlohmann::json::parse(h.transport->last.body);
  CHECK_FALSE(body.contains("temperature"));
}

TEST_CASE("replay serves recorded fixtures and names the missing key") {
  testing::TempDir dir;
  auto store = std::make_shared<FixtureStore>(dir.path());
  const auto r = request();
  store->record(r, "{\"grade\": 4, \"explanation\": \"x\"}");

  Gateway gw(std::make_shared<ReplayProvider>(store));
  const auto before = network_attempts();
  const auto response = gw.complete(r, config());
  CHECK(response.retrieved_from == RetrievedFrom::Replay);
  CHECK(response.text == "{\"grade\": 4, \"explanation\": \"x\"}");

  auto other = r;
  other.user_text = "different";
  try {
    gw.complete(other, config());
    FAIL("expected ReplayMiss");
  } catch (const GatewayError& e) {
    CHECK(e.kind() == Kind::ReplayMiss);
    CHECK(std::string(e.what()).find(other.key()) != std::string::npos);
  }
  CHECK(network_attempts() == before);
}

TEST_CASE("live replies are recorded and audited") {
  testing::TempDir dir;
  testing::QuietLog quiet;
  Harness h({{200, R"({"choices":[{"message":{"content":"reply"}}],"usage":{"prompt_tokens":7,"completion_tokens":2}})"}});
  auto store = std::make_shared<FixtureStore>(dir / "fixtures");
  Gateway gw(h.provider, {dir / "audit", store});
  const auto r = request();
  gw.complete(r, config());

  CHECK(store->lookup(r.key()) == "reply");
  std::ifstream audit(dir / "audit" / (r.key() + ".json"));
  REQUIRE(audit);
  const auto record = nlohmann::json::parse(audit);
  CHECK(record["request_key"] == r.key());
  CHECK(record["response"]["text"] == "reply");
  CHECK(record["response"]["token_usage"]["prompt"] == 7);

  CHECK(store->record(r.key(), "again"));
  CHECK(store->lookup(r.key()) == "again");
}

TEST_CASE("in-flight requests per provider are bounded") {
  class SlowProvider : public ChatProvider {
   public:
    ChatResponse complete(const ChatRequest& r, const ProviderConfig&) override {
      const int now = ++in_flight;
      int seen = peak.load();
      while (now > seen && !peak.compare_exchange_weak(seen, now)) {
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(5));
      --in_flight;
      return {"ok", r.model.id, 0, std::nullopt, RetrievedFrom::Replay};
    }
    std::atomic<int> in_flight{0};
    std::atomic<int> peak{0};
  };
  auto provider = std::make_shared<SlowProvider>();
  Gateway gw(provider);
  auto c = config();
  c.max_concurrency = 2;
  std::vector<std::jthread> threads;
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&] {
      for (int i = 0; i < 4; ++i) gw.complete(request(), c);
    });
  }
  threads.clear();
  CHECK(provider->peak.load() <= 2);
  CHECK(provider->peak.load() >= 1);
}

TEST_CASE("built-in providers") {
  const auto openai = builtin_provider("openai");
  REQUIRE(openai);
  CHECK(openai->protocol == WireProtocol::OpenAiChat);
  CHECK(openai->credential_env == "OPENAI_API_KEY");
  const auto gemini = builtin_provider("gemini");
  REQUIRE(gemini);
  CHECK(gemini->protocol == WireProtocol::GeminiGenerate);
  CHECK_FALSE(builtin_provider("other"));
  CHECK(config_problems(*openai).empty());
}
