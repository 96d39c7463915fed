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

#include <algorithm>
#include <numeric>
#include <set>

#include "stumpboost/stump.hpp"

namespace stumpboost {

// Deliberately naive: no presort, no prefix sums. Every candidate's error is
// summed from scratch over the samples in index order.
StumpFit fit_stump_oracle(const LabeledFeatureSet& set, std::span<const int> targets,
                          std::span<const double> weights) {
  check_stump_inputs(set, targets, weights);
  const std::size_t n = set.samples();

  auto error_of = [&](const Stump& s) {
    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (apply_stump(s, set.row(i)) != targets[i]) err += weights[i];
    }
    return err;
  };

  bool have_best = false;
  StumpFit best;
  auto consider = [&](const Stump& s) {
    const double err = error_of(s);
    if (!have_best || err < best.weighted_error - kErrorTieTolerance) {
      best = {s, err};
      have_best = true;
    }
  };

  for (std::size_t j = 0; j < set.dims(); ++j) {
    std::set<float> distinct;
    for (std::size_t i = 0; i < n; ++i) distinct.insert(set.at(i, j));
    std::vector<double> thresholds{kSentinelThreshold};
    for (auto it = distinct.begin(); std::next(it) != distinct.end(); ++it) {
      thresholds.push_back(std::midpoint(static_cast<double>(*it), static_cast<double>(*std::next(it))));
    }
    for (double t : thresholds) {
      consider(Stump{j, t, 1});
      consider(Stump{j, t, -1});
    }
  }
  best.weighted_error = std::max(0.0, best.weighted_error);
  return best;
}

}  // namespace stumpboost
