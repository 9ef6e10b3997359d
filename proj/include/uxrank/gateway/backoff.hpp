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
#include <random>

namespace uxrank::gateway {

/// Exponential backoff: base * factor^n, scaled by a uniform jitter in
/// [1 - jitter, 1 + jitter], never above cap.
struct BackoffPolicy {
  std::chrono::milliseconds base{1000};
  double factor = 2.0;
  double jitter = 0.2;
  std::chrono::milliseconds cap{30000};

  /// Delay before retry number `retry` (0 for the first retry).
  std::chrono::milliseconds delay(int retry, std::mt19937_64& rng) const;
};

}  // namespace uxrank::gateway
