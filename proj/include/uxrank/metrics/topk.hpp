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

#include "uxrank/metrics/kappa.hpp"
#include "uxrank/ranking/severity.hpp"

namespace uxrank::metrics {

/// 1 when the top-k sets of the two rankings intersect, else 0. Both rankings
/// must cover the same task ids (MetricsError::UniverseMismatch otherwise).
int hit_rate_at_k(const ranking::SeverityRanking& llm, const ranking::SeverityRanking& expert,
                  int k);

/// |top_k(llm) ∩ top_k(expert)| / k.
double accuracy_at_k(const ranking::SeverityRanking& llm, const ranking::SeverityRanking& expert,
                     int k);

}  // namespace uxrank::metrics
