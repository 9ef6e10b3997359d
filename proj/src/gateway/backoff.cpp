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

#include "uxrank/gateway/backoff.hpp"

#include <algorithm>
#include <cmath>

namespace uxrank::gateway {

std::chrono::milliseconds BackoffPolicy::delay(int retry, std::mt19937_64& rng) const {
  const double cap_ms = static_cast<double>(cap.count());
  const double raw = std::min(cap_ms, static_cast<double>(base.count()) *
                                          std::pow(factor, std::max(retry, 0)));
  std::uniform_real_distribution<double> dist(1.0 - jitter, 1.0 + jitter);
  const double jittered = std::clamp(raw * dist(rng), 0.0, cap_ms);
  return std::chrono::milliseconds(static_cast<std::int64_t>(std::llround(jittered)));
}

}  // namespace uxrank::gateway
