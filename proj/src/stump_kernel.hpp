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

// Per-feature threshold scan shared by the parallel and serial fits.

#include <cmath>
#include <numeric>

#include "stumpboost/stump.hpp"

namespace stumpboost::detail {

struct FeatureBest {
  double error;
  double threshold;
  int polarity;
};

/// Class weight totals, accumulated in sample order.
struct WeightTotals {
  double positive = 0.0;
  double negative = 0.0;
};

inline WeightTotals weight_totals(std::span<const int> targets, std::span<const double> weights) {
  WeightTotals totals;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    (targets[i] > 0 ? totals.positive : totals.negative) += weights[i];
  }
  return totals;
}

/// One pass over a presorted column. Samples at or below a candidate
/// threshold form the "left" side, which polarity +1 labels -1.
inline FeatureBest scan_feature(std::span<const std::uint32_t> order, std::span<const float> values,
                                std::span<const int> targets, std::span<const double> weights,
                                const WeightTotals& totals) {
  // Sentinel threshold: nothing on the left.
  FeatureBest best{totals.negative, kSentinelThreshold, 1};
  if (totals.positive < best.error - kErrorTieTolerance) best = {totals.positive, kSentinelThreshold, -1};

  double left_pos = 0.0;
  double left_neg = 0.0;
  const std::size_t n = order.size();
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint32_t i = order[k];
    (targets[i] > 0 ? left_pos : left_neg) += weights[i];
    if (k + 1 == n || !(values[k] < values[k + 1])) continue;

    const double err_plus = left_pos + (totals.negative - left_neg);
    const double err_minus = left_neg + (totals.positive - left_pos);
    if (err_plus < best.error - kErrorTieTolerance) {
      best = {err_plus, std::midpoint(static_cast<double>(values[k]), static_cast<double>(values[k + 1])), 1};
    }
    if (err_minus < best.error - kErrorTieTolerance) {
      best = {err_minus, std::midpoint(static_cast<double>(values[k]), static_cast<double>(values[k + 1])), -1};
    }
  }
  return best;
}

/// Ascending-feature reduction with the same tie rule as the scan.
inline StumpFit reduce_features(std::span<const FeatureBest> per_feature) {
  StumpFit fit{Stump{0, per_feature[0].threshold, per_feature[0].polarity}, per_feature[0].error};
  for (std::size_t j = 1; j < per_feature.size(); ++j) {
    if (per_feature[j].error < fit.weighted_error - kErrorTieTolerance) {
      fit = {Stump{j, per_feature[j].threshold, per_feature[j].polarity}, per_feature[j].error};
    }
  }
  fit.weighted_error = std::max(0.0, fit.weighted_error);
  return fit;
}

}  // namespace stumpboost::detail
