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
#include <functional>
#include <span>
#include <vector>

#include "stumpboost/feature_store.hpp"
#include "stumpboost/stump.hpp"

namespace stumpboost {

inline constexpr std::size_t kDefaultRounds = 256;

struct TrainConfig {
  std::size_t rounds = kDefaultRounds;
  double epsilon_clamp = 1e-10;
  double early_stop_margin = 0.0;

  /// Throws unless rounds >= 1, 0 < epsilon_clamp < 0.5, margin >= 0.
  void validate() const;
};

struct WeightedStump {
  Stump stump;
  double alpha = 0.0;

  bool operator==(const WeightedStump&) const = default;
};

/// Per-round diagnostics. loss_bound is the running product of
/// 2 * sqrt(eps_clamped * (1 - eps_clamped)), an upper bound on training error.
struct RoundTrace {
  double error = 0.0;
  double alpha = 0.0;
  double loss_bound = 1.0;

  bool operator==(const RoundTrace&) const = default;
};

struct BinaryModel {
  std::vector<WeightedStump> rounds;
  std::vector<RoundTrace> trace;

  bool empty() const { return rounds.empty(); }
  bool operator==(const BinaryModel&) const = default;
};

/// One-vs-rest bundle: models[k] scores classes[k] against the rest.
struct MultiClassModel {
  std::size_t round_budget = kDefaultRounds;
  std::size_t dims = 0;
  std::vector<std::int32_t> classes;
  std::vector<BinaryModel> models;

  /// Throws if `label` has no model.
  const BinaryModel& model_for(std::int32_t label) const;
  bool operator==(const MultiClassModel&) const = default;
};

/// Called after each accepted round with the renormalized sample weights.
using RoundHook = std::function<void(std::size_t round, std::span<const double> weights)>;

/// Discrete AdaBoost over decision stumps. Stops early, without adding the
/// stump, once the best weighted error reaches 0.5 - early_stop_margin.
/// `sorted` may be null, in which case the set is presorted here.
BinaryModel train_binary(const LabeledFeatureSet& set, std::span<const int> targets,
                         const TrainConfig& config, const SortedColumns* sorted = nullptr,
                         const RoundHook& hook = {});

/// Sum of alpha * h(x); 0 for an empty model.
double decision_score(const BinaryModel& model, std::span<const float> x);
/// Sign of decision_score, with 0 mapped to +1.
int predict_binary(const BinaryModel& model, std::span<const float> x);

/// One binary model per class present in `set`; needs at least two classes.
MultiClassModel train_ovr(const LabeledFeatureSet& set, const TrainConfig& config);

/// decision_score of every per-class model, in model.classes order.
std::vector<double> class_scores(const MultiClassModel& model, std::span<const float> x);
/// Argmax of class_scores; ties go to the lowest class id.
std::int32_t predict_multiclass(const MultiClassModel& model, std::span<const float> x);

/// Entry t-1 is the training error of the first t rounds.
std::vector<double> staged_errors(const BinaryModel& model, const LabeledFeatureSet& set,
                                  std::span<const int> targets);

/// +1 where label == positive_class, -1 elsewhere.
std::vector<int> one_vs_rest_targets(const LabeledFeatureSet& set, std::int32_t positive_class);

}  // namespace stumpboost
