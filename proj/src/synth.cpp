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

#include "stumpboost/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "stumpboost/common.hpp"
#include "stumpboost/harness.hpp"
#include "stumpboost/rng.hpp"

namespace stumpboost {

void SynthConfig::validate() const {
  if (classes < 2) throw Error("synth: need at least 2 classes");
  if (train_per_class == 0 || test_per_class == 0) throw Error("synth: per-class sample counts must be positive");
  if (blocks.empty()) throw Error("synth: need at least one block");
  if (!(signal_gap > 0.0) || !std::isfinite(signal_gap)) throw Error("synth: signal gap must be positive");
  if (!(noise_scale > 0.0) || !std::isfinite(noise_scale)) throw Error("synth: noise scale must be positive");
  std::set<std::int32_t> covered;
  for (const auto& b : blocks) {
    if (b.width() == 0) throw Error("synth: block '" + b.name + "' has zero width");
    if (b.coverage.empty() && b.informative > 0) throw Error("synth: block '" + b.name + "' covers no class");
    if (b.informative < b.coverage.size()) {
      throw Error("synth: block '" + b.name + "' has fewer informative dims than covered classes");
    }
    for (auto c : b.coverage) {
      if (c < 0 || static_cast<std::size_t>(c) >= classes) {
        throw Error("synth: block '" + b.name + "' covers unknown class " + std::to_string(c));
      }
      covered.insert(c);
    }
  }
  if (covered.size() != classes) throw Error("synth: block coverage does not include every class");
}

namespace {

struct Layout {
  std::size_t slots = 0;
  std::vector<std::size_t> offsets;
};

Layout layout_of(const SynthConfig& config) {
  Layout layout;
  std::size_t offset = 0;
  for (const auto& b : config.blocks) {
    layout.offsets.push_back(offset);
    offset += b.width();
    if (!b.coverage.empty()) {
      layout.slots = std::max(layout.slots, (b.informative + b.coverage.size() - 1) / b.coverage.size());
    }
  }
  return layout;
}

void emit_rows(const SynthConfig& config, const Layout& layout, std::size_t per_class, std::size_t dims,
               std::mt19937_64& engine, NormalSampler& normal, std::vector<float>& values,
               std::vector<std::int32_t>& labels) {
  const double half_gap = 0.5 * config.signal_gap;
  std::vector<float> latent(config.classes * layout.slots);
  std::vector<float> row(dims);
  for (std::size_t label = 0; label < config.classes; ++label) {
    for (std::size_t m = 0; m < per_class; ++m) {
      for (std::size_t c = 0; c < config.classes; ++c) {
        const double mean = c == label ? half_gap : -half_gap;
        for (std::size_t s = 0; s < layout.slots; ++s) {
          latent[c * layout.slots + s] = static_cast<float>(mean + config.noise_scale * normal(engine));
        }
      }
      for (std::size_t b = 0; b < config.blocks.size(); ++b) {
        const auto& block = config.blocks[b];
        float* out = row.data() + layout.offsets[b];
        const std::size_t k = block.informative;
        for (std::size_t j = 0; j < k; ++j) {
          const auto c = static_cast<std::size_t>(block.coverage[j % block.coverage.size()]);
          out[j] = std::ldexp(latent[c * layout.slots + j / block.coverage.size()], static_cast<int>(b));
        }
        for (std::size_t q = 0; q < block.redundant; ++q) {
          for (std::size_t j = 0; j < k; ++j) out[k * (q + 1) + j] = std::ldexp(out[j], static_cast<int>(q + 1));
        }
        for (std::size_t z = 0; z < block.noise; ++z) {
          out[k * (1 + block.redundant) + z] = static_cast<float>(config.noise_scale * normal(engine));
        }
      }
      values.insert(values.end(), row.begin(), row.end());
      labels.push_back(static_cast<std::int32_t>(label));
    }
  }
}

}  // namespace

SynthData generate(const SynthConfig& config) {
  config.validate();
  const Layout layout = layout_of(config);
  std::vector<Block> manifest_blocks;
  for (std::size_t b = 0; b < config.blocks.size(); ++b) {
    manifest_blocks.push_back({config.blocks[b].name, layout.offsets[b], config.blocks[b].width()});
  }
  const BlockManifest manifest(std::move(manifest_blocks));
  const std::size_t dims = manifest.total_width();

  std::mt19937_64 engine(config.seed);
  NormalSampler normal;
  auto make_set = [&](std::size_t per_class) {
    std::vector<float> values;
    std::vector<std::int32_t> labels;
    values.reserve(per_class * config.classes * dims);
    emit_rows(config, layout, per_class, dims, engine, normal, values, labels);
    const std::size_t n = labels.size();
    return LabeledFeatureSet(n, dims, std::move(values), std::move(labels), manifest);
  };
  LabeledFeatureSet train = make_set(config.train_per_class);
  LabeledFeatureSet test = make_set(config.test_per_class);

  std::vector<std::vector<std::size_t>> truth(config.blocks.size());
  for (std::size_t b = 0; b < config.blocks.size(); ++b) {
    truth[b].resize(config.blocks[b].informative);
    std::iota(truth[b].begin(), truth[b].end(), layout.offsets[b]);
  }
  return SynthData{std::move(train), std::move(test), std::move(truth)};
}

std::vector<std::int32_t> coverage_at_level(std::size_t classes, std::size_t blocks, std::size_t block,
                                            double level) {
  if (blocks == 0 || block >= blocks) throw Error("coverage_at_level: bad block index");
  if (!(level >= 0.0 && level <= 1.0)) throw Error("coverage_at_level: level must lie in [0, 1]");
  std::vector<std::int32_t> own;
  std::vector<std::int32_t> others;
  // Others are visited starting just after this block's first class so that
  // partially shared coverage is spread evenly across blocks.
  for (std::size_t step = 0; step < classes; ++step) {
    const std::size_t c = (block + step) % classes;
    (c % blocks == block ? own : others).push_back(static_cast<std::int32_t>(c));
  }
  const auto extra = static_cast<std::size_t>(std::llround((1.0 - level) * static_cast<double>(others.size())));
  own.insert(own.end(), others.begin(), others.begin() + static_cast<std::ptrdiff_t>(extra));
  std::sort(own.begin(), own.end());
  return own;
}

SynthConfig make_synth_config(std::size_t classes, std::size_t block_count, std::size_t informative,
                              std::size_t redundant, std::size_t noise, double level) {
  SynthConfig config;
  config.classes = classes;
  for (std::size_t b = 0; b < block_count; ++b) {
    config.blocks.push_back({"b" + std::to_string(b), informative, redundant, noise,
                             coverage_at_level(classes, block_count, b, level)});
  }
  return config;
}

SynthConfig with_disjointness(const SynthConfig& base, double level) {
  SynthConfig config = base;
  for (std::size_t b = 0; b < config.blocks.size(); ++b) {
    config.blocks[b].coverage = coverage_at_level(config.classes, config.blocks.size(), b, level);
  }
  return config;
}

double CurvePoint::mean_gap() const {
  if (gaps.empty()) return 0.0;
  return std::accumulate(gaps.begin(), gaps.end(), 0.0) / static_cast<double>(gaps.size());
}

std::vector<CurvePoint> improvement_curve(const SynthConfig& base, std::span<const double> levels,
                                          std::span<const std::uint64_t> seeds, const TrainConfig& config) {
  if (seeds.empty()) throw Error("improvement_curve: need at least one seed");
  std::vector<CurvePoint> curve;
  for (double level : levels) {
    CurvePoint point;
    point.level = level;
    SynthConfig synth = with_disjointness(base, level);
    for (auto seed : seeds) {
      synth.seed = seed;
      const SynthData data = generate(synth);
      const ComparisonTable table = compare_blocks(data.train, data.test, config);
      const double single = table.best_single_block();
      const double concat = table.concat_row().accuracy;
      point.mean_best_single += single;
      point.mean_concat += concat;
      point.gaps.push_back(concat - single);
    }
    point.mean_best_single /= static_cast<double>(seeds.size());
    point.mean_concat /= static_cast<double>(seeds.size());
    curve.push_back(std::move(point));
  }
  return curve;
}

}  // namespace stumpboost
