// Copyright 2026 The StumpBoost Authors. All Rights Reserved.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "stumpboost/feature_store.hpp"

namespace stumpboost {

/// Threshold of the constant-predictor stump: below every column value, so
/// the stump always answers `polarity`.
inline constexpr double kSentinelThreshold = -std::numeric_limits<double>::infinity();

/// Candidates whose error is within this of the incumbent count as ties.
inline constexpr double kErrorTieTolerance = 1e-13;

/// h(x) = polarity if x[feature] > threshold, else -polarity.
struct Stump {
  std::size_t feature = 0;
  double threshold = kSentinelThreshold;
  int polarity = 1;

  bool is_constant() const { return threshold == kSentinelThreshold; }
  bool operator==(const Stump&) const = default;
};

/// Unchecked prediction for hot loops.
inline int apply_stump(const Stump& stump, std::span<const float> x) {
  return static_cast<double>(x[stump.feature]) > stump.threshold ? stump.polarity : -stump.polarity;
}

/// Checked prediction; throws if x is too short.
int stump_predict(const Stump& stump, std::span<const float> x);

struct StumpFit {
  Stump stump;
  double weighted_error = 0.0;
};

/// Per-column ascending order of sample indices (stable on ties) and the
/// column values in that order. Column-major.
class SortedColumns {
 public:
  SortedColumns(std::size_t samples, std::size_t dims);

  std::size_t samples() const { return samples_; }
  std::size_t dims() const { return dims_; }

  std::span<const std::uint32_t> order(std::size_t column) const {
    return std::span<const std::uint32_t>(order_).subspan(column * samples_, samples_);
  }
  std::span<const float> sorted_values(std::size_t column) const {
    return std::span<const float>(values_).subspan(column * samples_, samples_);
  }

  std::span<std::uint32_t> order(std::size_t column) {
    return std::span<std::uint32_t>(order_).subspan(column * samples_, samples_);
  }
  std::span<float> sorted_values(std::size_t column) {
    return std::span<float>(values_).subspan(column * samples_, samples_);
  }

 private:
  std::size_t samples_;
  std::size_t dims_;
  std::vector<std::uint32_t> order_;
  std::vector<float> values_;
};

/// Columns sorted in parallel (OpenMP).
SortedColumns presort(const LabeledFeatureSet& set);
/// Single-threaded reference for presort.
SortedColumns presort_serial(const LabeledFeatureSet& set);

/// Work counters for the threshold scan; one unit per sample visited.
struct ScanCounters {
  std::uint64_t samples_visited = 0;
  std::uint64_t features_scanned = 0;
};

/// Minimum weighted-error stump over all features, midpoint thresholds and
/// both polarities. Ties go to the lowest feature, then the smallest
/// threshold, then polarity +1. Features are scanned in parallel and the
/// per-feature winners are reduced in ascending feature order, so the result
/// is bit-identical to fit_stump_serial.
///
/// targets are +1/-1; weights are non-negative and sum to 1 within 1e-9.
StumpFit fit_stump(const LabeledFeatureSet& set, std::span<const int> targets,
                   std::span<const double> weights, const SortedColumns& sorted,
                   ScanCounters* counters = nullptr);

/// Single-threaded reference of fit_stump (same kernel, sequential loop).
StumpFit fit_stump_serial(const LabeledFeatureSet& set, std::span<const int> targets,
                          std::span<const double> weights, const SortedColumns& sorted,
                          ScanCounters* counters = nullptr);

/// Brute-force oracle: enumerates every (feature, threshold, polarity) and
/// sums the misclassified weight directly. O(d * n^2); meant for tests.
StumpFit fit_stump_oracle(const LabeledFeatureSet& set, std::span<const int> targets,
                          std::span<const double> weights);

/// Throws unless lengths match n, targets are +/-1, and weights are
/// non-negative, finite and normalized.
void check_stump_inputs(const LabeledFeatureSet& set, std::span<const int> targets,
                        std::span<const double> weights);

}  // namespace stumpboost
