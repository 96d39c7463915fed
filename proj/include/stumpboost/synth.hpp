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
#include <span>
#include <string>
#include <vector>

#include "stumpboost/adaboost.hpp"
#include "stumpboost/feature_store.hpp"

namespace stumpboost {

/// One synthetic layer block. Width = informative * (1 + redundant) + noise.
struct SynthBlock {
  std::string name;
  std::size_t informative = 0;
  std::size_t redundant = 0;
  std::size_t noise = 0;
  std::vector<std::int32_t> coverage;  // classes this block's informative columns separate

  std::size_t width() const { return informative * (1 + redundant) + noise; }
};

// Generative model. Every sample draws one latent per (class c, slot s):
// N(+gap/2, noise_scale^2) if its label is c, N(-gap/2, noise_scale^2)
// otherwise. Informative column j of a block reads the latent of class
// coverage[j % |coverage|], slot j / |coverage|, scaled by 2^block_index.
// Blocks covering the same class therefore see the same signal. Redundant
// copy q of an informative column scales it by 2^(q+1); power-of-two scaling
// is exact in float, so copies are strictly increasing transforms. Noise
// columns are N(0, noise_scale^2), independent per block.
struct SynthConfig {
  std::size_t classes = 6;
  std::size_t train_per_class = 60;
  std::size_t test_per_class = 40;
  std::vector<SynthBlock> blocks;
  double signal_gap = 2.0;
  double noise_scale = 1.0;
  std::uint64_t seed = 0;

  void validate() const;
};

struct SynthData {
  LabeledFeatureSet train;
  LabeledFeatureSet test;
  /// Per block, the global column indices of its informative (source) columns.
  std::vector<std::vector<std::size_t>> informative_columns;
};

SynthData generate(const SynthConfig& config);

/// Classes covered by block `block` of `blocks` at a disjointness level in
/// [0, 1]: its round-robin group (c % blocks == block) plus the first
/// round((1 - level) * #others) other classes. Level 1 is a partition,
/// level 0 has every block covering every class.
std::vector<std::int32_t> coverage_at_level(std::size_t classes, std::size_t blocks, std::size_t block,
                                            double level);

/// `block_count` blocks named b0, b1, ... with identical shape and coverage
/// from coverage_at_level.
SynthConfig make_synth_config(std::size_t classes, std::size_t block_count, std::size_t informative,
                              std::size_t redundant, std::size_t noise, double level);

/// Copy of `base` with every block's coverage recomputed for `level`.
SynthConfig with_disjointness(const SynthConfig& base, double level);

struct CurvePoint {
  double level = 0.0;
  double mean_best_single = 0.0;
  double mean_concat = 0.0;
  std::vector<double> gaps;  // concat - best single, one per seed

  double mean_gap() const;
};

/// For each level, generates one dataset per seed, runs the block-vs-concat
/// comparison and averages the accuracies.
std::vector<CurvePoint> improvement_curve(const SynthConfig& base, std::span<const double> levels,
                                          std::span<const std::uint64_t> seeds, const TrainConfig& config);

}  // namespace stumpboost
