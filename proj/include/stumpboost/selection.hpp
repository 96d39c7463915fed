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
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "stumpboost/adaboost.hpp"
#include "stumpboost/feature_store.hpp"

namespace stumpboost {

/// How often a feature was picked and the alpha it collected.
struct FeatureUsage {
  std::size_t multiplicity = 0;
  double vote_mass = 0.0;

  bool operator==(const FeatureUsage&) const = default;
};

/// Feature index -> usage, over every round (and every class for OVR).
using FeatureSelection = std::map<std::size_t, FeatureUsage>;

FeatureSelection selected_features(const BinaryModel& model);
FeatureSelection selected_features(const MultiClassModel& model);

struct BlockUsage {
  std::string name;
  std::size_t distinct = 0;
  std::size_t multiplicity = 0;
  double vote_mass = 0.0;
};

struct SelectionReport {
  std::vector<BlockUsage> blocks;  // manifest order
  std::size_t distinct_total = 0;
  std::size_t rounds_total = 0;
};

/// Attributes each selected feature to its manifest block. Throws if a
/// feature falls outside the manifest.
SelectionReport per_block_report(const BinaryModel& model, const BlockManifest& manifest);
SelectionReport per_block_report(const MultiClassModel& model, const BlockManifest& manifest);
/// One report per class, in model.classes order.
std::vector<std::pair<std::int32_t, SelectionReport>> per_class_reports(const MultiClassModel& model,
                                                                        const BlockManifest& manifest);

/// "block=<name> distinct=<k> multiplicity=<m> votemass=<a>" per block.
std::string format_report_machine(const SelectionReport& report);
std::string format_report_table(const SelectionReport& report);

}  // namespace stumpboost
