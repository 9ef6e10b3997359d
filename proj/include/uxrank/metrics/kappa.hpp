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
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "uxrank/core/model.hpp"

namespace uxrank::metrics {

class MetricsError : public std::runtime_error {
 public:
  enum class Kind { EmptyInput, MixedScheme, UniverseMismatch, InvalidArgument };

  MetricsError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Ratings of the same cells by two raters.
struct RatingPairs {
  RatingKind scheme = RatingKind::Binary;
  std::vector<std::pair<Rating, Rating>> pairs;

  /// Zips two equally long rating vectors. Throws MetricsError on length
  /// mismatch, empty input or mixed kinds.
  static RatingPairs zip(std::span<const Rating> a, std::span<const Rating> b);
};

struct KappaResult {
  /// nullopt when chance agreement is total and kappa is undefined.
  std::optional<double> value;
  bool weighted = false;
  int n_pairs = 0;

  bool defined() const { return value.has_value(); }
  friend bool operator==(const KappaResult&, const KappaResult&) = default;
};

/// Unweighted Cohen's kappa, (p_o - p_e) / (1 - p_e). Binary pairs only,
/// unless `grades_as_nominal` is set, in which case grades are treated as
/// five unordered categories.
KappaResult cohen_kappa(const RatingPairs& pairs, bool grades_as_nominal = false);

/// Quadratically weighted kappa over the fixed grade scale 1..5:
/// 1 - sum(w * O) / sum(w * E) with w_ij = (i - j)^2 / 16.
KappaResult weighted_kappa(const RatingPairs& pairs);

}  // namespace uxrank::metrics
