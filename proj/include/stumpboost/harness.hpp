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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stumpboost/adaboost.hpp"
#include "stumpboost/feature_store.hpp"

namespace stumpboost {

/// Top-1 accuracy of predict_multiclass over `set`.
double evaluate(const MultiClassModel& model, const LabeledFeatureSet& set);

struct SplitParams {
  std::size_t train_count = 0;
  std::optional<std::size_t> test_count;
  std::uint64_t seed = 0;
};

struct NamedPath {
  std::string name;
  std::filesystem::path path;
};

/// Exactly one of `split` and `test_blocks` is used: either the per-block
/// files are split per class, or `blocks` are training files and
/// `test_blocks` their held-out counterparts (same names, same order).
struct ExperimentSpec {
  std::vector<NamedPath> blocks;
  std::vector<NamedPath> test_blocks;
  std::optional<SplitParams> split;
  TrainConfig train;
  std::vector<std::int32_t> drop_classes;

  void validate() const;
};

struct ComparisonRow {
  std::string features;
  double accuracy = 0.0;  // fraction in [0, 1]
};

/// One row per block, then one for the concatenation of all blocks.
struct ComparisonTable {
  std::vector<ComparisonRow> rows;

  const ComparisonRow& concat_row() const { return rows.back(); }
  double best_single_block() const;
};

/// Trains and evaluates every manifest block of `train` on its own and then
/// the full matrix; `test` must share the manifest.
ComparisonTable compare_blocks(const LabeledFeatureSet& train, const LabeledFeatureSet& test,
                               const TrainConfig& config);

/// Concatenates `blocks`, splits once (so every row sees the same
/// partition), then compare_blocks.
ComparisonTable run_comparison(std::span<const LabeledFeatureSet> blocks, const SplitParams& split,
                               const TrainConfig& config);

/// File-driven comparison: loads, renames each file to its block name, then
/// runs the split or pre-split protocol.
ComparisonTable run_comparison(const ExperimentSpec& spec);

/// Aligned two-column table, accuracy as a percentage with one decimal.
std::string format_table_text(const ComparisonTable& table);
/// "features,accuracy_pct" header, then one row per line.
std::string format_table_csv(const ComparisonTable& table);

/// Parses "name=path,name=path".
std::vector<NamedPath> parse_block_list(std::string_view text);

/// key=value lines; blank lines and '#' comments ignored.
std::map<std::string, std::string> parse_config_text(std::string_view text);
std::map<std::string, std::string> read_config_file(const std::filesystem::path& path);

/// CLI entry point: train, predict, eval, compare, synth, report.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

/// Caps OpenMP threads; no-op when built without OpenMP.
void set_thread_count(int threads);

}  // namespace stumpboost
