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

#include <random>
#include <set>

#include "uxrank/gateway/backoff.hpp"
#include "uxrank/gateway/request.hpp"

using namespace uxrank;
using namespace uxrank::gateway;

namespace {

ChatRequest sample() {
  ChatRequest r;
  r.model = ModelSpec{"vision-a", "openai", "2025-01", 0.0, true, "general"};
  r.system_text = "system";
  r.user_text = "user";
  r.images.push_back({MediaType::Png, std::string("\x89PNG fake", 9)});
  r.temperature = 0.0;
  return r;
}

}  // namespace

TEST_CASE("request key is a stable content hash") {
  const auto base = sample();
  CHECK(base.key().size() == 64);
  CHECK(base.key() == sample().key());

  std::set<std::string> keys{base.key()};
  auto changed = [&](auto mutate) {
    auto r = sample();
    mutate(r);
    return keys.insert(r.key()).second;
  };
  CHECK(changed([](ChatRequest& r) { r.model.id = "vision-b"; }));
  CHECK(changed([](ChatRequest& r) { r.system_text += " "; }));
  CHECK(changed([](ChatRequest& r) { r.user_text = "User"; }));
  CHECK(changed([](ChatRequest& r) { r.images[0].bytes += "x"; }));
  CHECK(changed([](ChatRequest& r) { r.images[0].media_type = MediaType::Jpeg; }));
  CHECK(changed([](ChatRequest& r) { r.images.push_back(r.images[0]); }));
  CHECK(changed([](ChatRequest& r) { r.temperature = 0.2; }));
  CHECK(changed([](ChatRequest& r) { r.temperature.reset(); }));
  // Texts are length-prefixed, so moving bytes between fields changes the key.
  CHECK(changed([](ChatRequest& r) {
    r.system_text = "systemu";
    r.user_text = "ser";
  }));
}

TEST_CASE("provider metadata does not enter the key") {
  auto r = sample();
  const auto key = r.key();
  r.model.category = "other";
  r.model.provider = "gemini";
  r.model.version = "v9";
  CHECK(r.key() == key);
}

TEST_CASE("make_request applies the effective temperature") {
  prompt::PromptBundle bundle;
  bundle.system_text = "s";
  bundle.user_text = "u";
  ModelSpec m{"m", "openai", "", std::nullopt, true, ""};
  CHECK(make_request(m, bundle).temperature == 0.0);
  m.supports_temperature = false;
  CHECK(make_request(m, bundle).temperature == std::nullopt);
}

TEST_CASE("backoff grows, jitters within bounds and is capped") {
  BackoffPolicy policy;
  std::mt19937_64 rng(7);
  for (int retry = 0; retry < 8; ++retry) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto d = policy.delay(retry, rng).count();
      const double nominal = 1000.0 * std::pow(2.0, retry);
      CHECK(d <= 30000);
      CHECK(d >= static_cast<long long>(std::min(nominal, 30000.0) * 0.8) - 1);
      CHECK(d <= static_cast<long long>(nominal * 1.2) + 1);
    }
  }
  BackoffPolicy fixed{std::chrono::milliseconds(10), 3.0, 0.0, std::chrono::milliseconds(1000)};
  CHECK(fixed.delay(0, rng).count() == 10);
  CHECK(fixed.delay(2, rng).count() == 90);
  CHECK(fixed.delay(10, rng).count() == 1000);
}
