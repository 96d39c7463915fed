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

#include "stumpboost/stump.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "stumpboost/common.hpp"
#include "stump_kernel.hpp"

namespace stumpboost {

SortedColumns::SortedColumns(std::size_t samples, std::size_t dims)
    : samples_(samples), dims_(dims), order_(samples * dims), values_(samples * dims) {}

namespace {

void sort_column(const LabeledFeatureSet& set, std::size_t j, SortedColumns& out) {
  auto order = out.order(j);
  std::iota(order.begin(), order.end(), std::uint32_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return set.at(a, j) < set.at(b, j); });
  auto values = out.sorted_values(j);
  for (std::size_t k = 0; k < order.size(); ++k) values[k] = set.at(order[k], j);
}

}  // namespace

SortedColumns presort(const LabeledFeatureSet& set) {
  if (set.samples() > UINT32_MAX) throw Error("presort: too many samples");
  SortedColumns out(set.samples(), set.dims());
  const auto d = static_cast<std::int64_t>(set.dims());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t j = 0; j < d; ++j) sort_column(set, static_cast<std::size_t>(j), out);
  return out;
}

SortedColumns presort_serial(const LabeledFeatureSet& set) {
  if (set.samples() > UINT32_MAX) throw Error("presort: too many samples");
  SortedColumns out(set.samples(), set.dims());
  for (std::size_t j = 0; j < set.dims(); ++j) sort_column(set, j, out);
  return out;
}

int stump_predict(const Stump& stump, std::span<const float> x) {
  if (stump.feature >= x.size()) {
    throw Error("stump feature " + std::to_string(stump.feature) + " out of range for row of " +
                std::to_string(x.size()) + " values");
  }
  return apply_stump(stump, x);
}

void check_stump_inputs(const LabeledFeatureSet& set, std::span<const int> targets,
                        std::span<const double> weights) {
  if (targets.size() != set.samples() || weights.size() != set.samples()) {
    throw Error("fit_stump: length mismatch (n=" + std::to_string(set.samples()) + ", targets=" +
                std::to_string(targets.size()) + ", weights=" + std::to_string(weights.size()) + ")");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (targets[i] != 1 && targets[i] != -1) {
      throw Error("fit_stump: target at row " + std::to_string(i) + " is " + std::to_string(targets[i]) +
                  ", expected +1 or -1");
    }
    if (!std::isfinite(weights[i]) || weights[i] < 0.0) {
      throw Error("fit_stump: weight at row " + std::to_string(i) + " is negative or non-finite");
    }
    sum += weights[i];
  }
  if (std::abs(sum - 1.0) > 1e-9) throw Error("fit_stump: weights not normalized (sum " + std::to_string(sum) + ")");
}

StumpFit fit_stump(const LabeledFeatureSet& set, std::span<const int> targets,
                   std::span<const double> weights, const SortedColumns& sorted, ScanCounters* counters) {
  check_stump_inputs(set, targets, weights);
  if (sorted.samples() != set.samples() || sorted.dims() != set.dims()) {
    throw Error("fit_stump: presorted columns do not match the set");
  }
  const auto totals = detail::weight_totals(targets, weights);
  std::vector<detail::FeatureBest> per_feature(set.dims());
  const auto d = static_cast<std::int64_t>(set.dims());
#pragma omp parallel for schedule(static)
  for (std::int64_t j = 0; j < d; ++j) {
    const auto col = static_cast<std::size_t>(j);
    per_feature[col] =
        detail::scan_feature(sorted.order(col), sorted.sorted_values(col), targets, weights, totals);
  }
  if (counters) {
    counters->samples_visited += set.samples() * set.dims();
    counters->features_scanned += set.dims();
  }
  return detail::reduce_features(per_feature);
}

}  // namespace stumpboost
