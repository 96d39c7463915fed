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

#include "stumpboost/common.hpp"
#include "stumpboost/stump.hpp"
#include "stump_kernel.hpp"

namespace stumpboost {

StumpFit fit_stump_serial(const LabeledFeatureSet& set, std::span<const int> targets,
                          std::span<const double> weights, const SortedColumns& sorted,
                          ScanCounters* counters) {
  check_stump_inputs(set, targets, weights);
  if (sorted.samples() != set.samples() || sorted.dims() != set.dims()) {
    throw Error("fit_stump: presorted columns do not match the set");
  }
  const auto totals = detail::weight_totals(targets, weights);
  std::vector<detail::FeatureBest> per_feature(set.dims());
  for (std::size_t j = 0; j < set.dims(); ++j) {
    const auto order = sorted.order(j);
    per_feature[j] = detail::scan_feature(order, sorted.sorted_values(j), targets, weights, totals);
    if (counters) {
      counters->samples_visited += order.size();
      ++counters->features_scanned;
    }
  }
  return detail::reduce_features(per_feature);
}

}  // namespace stumpboost
