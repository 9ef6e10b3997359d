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

#include "uxrank/metrics/kappa.hpp"

#include <array>
#include <cstdint>

namespace uxrank::metrics {
namespace {

using Kind = MetricsError::Kind;
constexpr int kGrades = Rating::kMaxGrade - Rating::kMinGrade + 1;

void check(const RatingPairs& pairs) {
  if (pairs.pairs.empty()) throw MetricsError(Kind::EmptyInput, "no rating pairs");
  for (const auto& [a, b] : pairs.pairs) {
    if (a.kind() != pairs.scheme || b.kind() != pairs.scheme) {
      throw MetricsError(Kind::MixedScheme, "pair (" + a.to_string() + ", " + b.to_string() +
                                                ") does not match the declared scheme");
    }
  }
}

// Category index: grade - 1, or 0 (passed) / 1 (failed).
int category(const Rating& r) {
  return r.is_grade() ? r.grade_value() - Rating::kMinGrade : r.severity();
}

}  // namespace

RatingPairs RatingPairs::zip(std::span<const Rating> a, std::span<const Rating> b) {
  if (a.size() != b.size()) {
    throw MetricsError(Kind::InvalidArgument, "rating vectors differ in length");
  }
  if (a.empty()) throw MetricsError(Kind::EmptyInput, "no rating pairs");
  RatingPairs out;
  out.scheme = a.front().kind();
  for (std::size_t i = 0; i < a.size(); ++i) out.pairs.emplace_back(a[i], b[i]);
  check(out);
  return out;
}

KappaResult cohen_kappa(const RatingPairs& pairs, bool grades_as_nominal) {
  check(pairs);
  if (pairs.scheme == RatingKind::Grade && !grades_as_nominal) {
    throw MetricsError(Kind::InvalidArgument,
                       "unweighted kappa on grades requires treating them as nominal");
  }
  std::array<std::int64_t, kGrades> row{};
  std::array<std::int64_t, kGrades> col{};
  std::int64_t agree = 0;
  for (const auto& [a, b] : pairs.pairs) {
    const int i = category(a);
    const int j = category(b);
    ++row[i];
    ++col[j];
    if (i == j) ++agree;
  }
  const auto n = static_cast<std::int64_t>(pairs.pairs.size());
  std::int64_t chance = 0;  // n^2 * p_e
  for (int c = 0; c < kGrades; ++c) chance += row[c] * col[c];

  KappaResult out{std::nullopt, false, static_cast<int>(n)};
  const std::int64_t denominator = n * n - chance;
  if (denominator != 0) {
    out.value = static_cast<double>(n * agree - chance) / static_cast<double>(denominator);
  }
  return out;
}

KappaResult weighted_kappa(const RatingPairs& pairs) {
  check(pairs);
  if (pairs.scheme != RatingKind::Grade) {
    throw MetricsError(Kind::MixedScheme, "weighted kappa needs grade ratings");
  }
  std::array<std::int64_t, kGrades> row{};
  std::array<std::int64_t, kGrades> col{};
  std::int64_t observed = 0;  // sum (i-j)^2 O_ij
  for (const auto& [a, b] : pairs.pairs) {
    const int i = category(a);
    const int j = category(b);
    ++row[i];
    ++col[j];
    observed += static_cast<std::int64_t>(i - j) * (i - j);
  }
  std::int64_t expected = 0;  // n * sum (i-j)^2 E_ij
  for (int i = 0; i < kGrades; ++i) {
    for (int j = 0; j < kGrades; ++j) {
      expected += static_cast<std::int64_t>(i - j) * (i - j) * row[i] * col[j];
    }
  }
  const auto n = static_cast<std::int64_t>(pairs.pairs.size());
  KappaResult out{std::nullopt, true, static_cast<int>(n)};
  // The common 1/(K-1)^2 weight factor cancels in the ratio.
  if (expected != 0) {
    out.value = static_cast<double>(expected - n * observed) / static_cast<double>(expected);
  }
  return out;
}

}  // namespace uxrank::metrics
