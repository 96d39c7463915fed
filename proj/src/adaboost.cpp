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

#include "stumpboost/adaboost.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "stumpboost/common.hpp"

namespace stumpboost {

void TrainConfig::validate() const {
  if (rounds < 1) throw Error("TrainConfig: rounds must be at least 1");
  if (!(epsilon_clamp > 0.0 && epsilon_clamp < 0.5)) {
    throw Error("TrainConfig: epsilon_clamp must lie in (0, 0.5)");
  }
  if (!(early_stop_margin >= 0.0 && early_stop_margin < 0.5)) {
    throw Error("TrainConfig: early_stop_margin must lie in [0, 0.5)");
  }
}

const BinaryModel& MultiClassModel::model_for(std::int32_t label) const {
  auto it = std::find(classes.begin(), classes.end(), label);
  if (it == classes.end()) throw Error("no model for class " + std::to_string(label));
  return models[static_cast<std::size_t>(it - classes.begin())];
}

BinaryModel train_binary(const LabeledFeatureSet& set, std::span<const int> targets,
                         const TrainConfig& config, const SortedColumns* sorted, const RoundHook& hook) {
  config.validate();
  const std::size_t n = set.samples();
  if (targets.size() != n) {
    throw Error("train_binary: " + std::to_string(targets.size()) + " targets for " + std::to_string(n) +
                " samples");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (targets[i] != 1 && targets[i] != -1) {
      throw Error("train_binary: target at row " + std::to_string(i) + " is not +1/-1");
    }
  }

  std::optional<SortedColumns> owned;
  if (!sorted) sorted = &owned.emplace(presort(set));

  std::vector<double> weights(n, 1.0 / static_cast<double>(n));
  BinaryModel model;
  double bound = 1.0;
  for (std::size_t t = 0; t < config.rounds; ++t) {
    const StumpFit fit = fit_stump(set, targets, weights, *sorted);
    if (fit.weighted_error >= 0.5 - config.early_stop_margin) break;

    const double eps = std::clamp(fit.weighted_error, config.epsilon_clamp, 1.0 - config.epsilon_clamp);
    const double alpha = 0.5 * std::log((1.0 - eps) / eps);
    bound *= 2.0 * std::sqrt(eps * (1.0 - eps));

    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const int h = apply_stump(fit.stump, set.row(i));
      weights[i] *= std::exp(-alpha * targets[i] * h);
      sum += weights[i];
    }
    for (auto& w : weights) w /= sum;

    model.rounds.push_back({fit.stump, alpha});
    model.trace.push_back({fit.weighted_error, alpha, bound});
    if (hook) hook(t, weights);
  }
  return model;
}

double decision_score(const BinaryModel& model, std::span<const float> x) {
  double score = 0.0;
  for (const auto& r : model.rounds) score += r.alpha * stump_predict(r.stump, x);
  return score;
}

int predict_binary(const BinaryModel& model, std::span<const float> x) {
  return decision_score(model, x) >= 0.0 ? 1 : -1;
}

std::vector<int> one_vs_rest_targets(const LabeledFeatureSet& set, std::int32_t positive_class) {
  std::vector<int> targets(set.samples());
  for (std::size_t i = 0; i < targets.size(); ++i) targets[i] = set.labels()[i] == positive_class ? 1 : -1;
  return targets;
}

MultiClassModel train_ovr(const LabeledFeatureSet& set, const TrainConfig& config) {
  config.validate();
  MultiClassModel model;
  model.round_budget = config.rounds;
  model.dims = set.dims();
  model.classes = set.class_ids();
  if (model.classes.size() < 2) throw Error("train_ovr: training set has a single class");

  const SortedColumns sorted = presort(set);
  model.models.reserve(model.classes.size());
  for (auto c : model.classes) {
    const auto targets = one_vs_rest_targets(set, c);
    model.models.push_back(train_binary(set, targets, config, &sorted));
  }
  return model;
}

std::vector<double> class_scores(const MultiClassModel& model, std::span<const float> x) {
  std::vector<double> scores(model.models.size());
  for (std::size_t k = 0; k < scores.size(); ++k) scores[k] = decision_score(model.models[k], x);
  return scores;
}

std::int32_t predict_multiclass(const MultiClassModel& model, std::span<const float> x) {
  if (model.classes.empty()) throw Error("predict_multiclass: model has no classes");
  const auto scores = class_scores(model, x);
  std::size_t best = 0;
  for (std::size_t k = 1; k < scores.size(); ++k) {
    // Classes are stored ascending, so strict > keeps the lowest id on ties.
    if (scores[k] > scores[best]) best = k;
  }
  return model.classes[best];
}

std::vector<double> staged_errors(const BinaryModel& model, const LabeledFeatureSet& set,
                                  std::span<const int> targets) {
  if (targets.size() != set.samples()) throw Error("staged_errors: target count mismatch");
  for (const auto& r : model.rounds) {
    if (r.stump.feature >= set.dims()) {
      throw Error("staged_errors: model uses feature " + std::to_string(r.stump.feature) +
                  " but the set has " + std::to_string(set.dims()) + " dims");
    }
  }
  const std::size_t n = set.samples();
  std::vector<double> scores(n, 0.0);
  std::vector<double> errors;
  errors.reserve(model.rounds.size());
  for (const auto& r : model.rounds) {
    std::size_t wrong = 0;
    for (std::size_t i = 0; i < n; ++i) {
      scores[i] += r.alpha * apply_stump(r.stump, set.row(i));
      if ((scores[i] >= 0.0 ? 1 : -1) != targets[i]) ++wrong;
    }
    errors.push_back(static_cast<double>(wrong) / static_cast<double>(n));
  }
  return errors;
}

}  // namespace stumpboost
