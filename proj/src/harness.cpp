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

#include "stumpboost/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>

#include "stumpboost/common.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace stumpboost {

double evaluate(const MultiClassModel& model, const LabeledFeatureSet& set) {
  if (set.dims() != model.dims) {
    throw Error("evaluate: model expects " + std::to_string(model.dims) + " dims, set has " +
                std::to_string(set.dims()));
  }
  std::size_t correct = 0;
  for (std::size_t i = 0; i < set.samples(); ++i) {
    if (predict_multiclass(model, set.row(i)) == set.labels()[i]) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(set.samples());
}

void ExperimentSpec::validate() const {
  if (blocks.empty()) throw Error("experiment: at least one block is required");
  if (split && !test_blocks.empty()) throw Error("experiment: split parameters and pre-split test files are exclusive");
  if (!split && test_blocks.empty()) throw Error("experiment: need either split parameters or test files");
  if (!test_blocks.empty()) {
    if (test_blocks.size() != blocks.size()) throw Error("experiment: train and test block lists differ in length");
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      if (blocks[k].name != test_blocks[k].name) {
        throw Error("experiment: test block '" + test_blocks[k].name + "' does not match train block '" +
                    blocks[k].name + "'");
      }
    }
  }
  train.validate();
}

double ComparisonTable::best_single_block() const {
  double best = 0.0;
  for (std::size_t k = 0; k + 1 < rows.size(); ++k) best = std::max(best, rows[k].accuracy);
  return best;
}

ComparisonTable compare_blocks(const LabeledFeatureSet& train, const LabeledFeatureSet& test,
                               const TrainConfig& config) {
  if (train.manifest() != test.manifest()) throw Error("compare: train and test manifests differ");
  ComparisonTable table;
  std::string joined;
  for (const auto& block : train.manifest().blocks()) {
    const auto block_train = slice_block(train, block.name);
    const auto block_test = slice_block(test, block.name);
    const auto model = train_ovr(block_train, config);
    table.rows.push_back({block.name, evaluate(model, block_test)});
    joined += (joined.empty() ? "" : "-") + block.name;
  }
  if (train.manifest().size() == 1) {
    table.rows.push_back({joined, table.rows.front().accuracy});
  } else {
    const auto model = train_ovr(train, config);
    table.rows.push_back({joined, evaluate(model, test)});
  }
  return table;
}

ComparisonTable run_comparison(std::span<const LabeledFeatureSet> blocks, const SplitParams& split,
                               const TrainConfig& config) {
  const auto all = concat_blocks(blocks);
  const auto parts = split_per_class(all, split.train_count, split.test_count, split.seed);
  return compare_blocks(parts.train, parts.test, config);
}

namespace {

std::vector<LabeledFeatureSet> load_named(const std::vector<NamedPath>& list,
                                          std::span<const std::int32_t> drop) {
  std::vector<LabeledFeatureSet> sets;
  for (const auto& entry : list) {
    auto set = rename_as_block(load_features(entry.path), entry.name);
    sets.push_back(drop.empty() ? std::move(set) : drop_classes(set, drop));
  }
  return sets;
}

}  // namespace

ComparisonTable run_comparison(const ExperimentSpec& spec) {
  spec.validate();
  const auto train_sets = load_named(spec.blocks, spec.drop_classes);
  if (spec.split) return run_comparison(train_sets, *spec.split, spec.train);
  const auto test_sets = load_named(spec.test_blocks, spec.drop_classes);
  return compare_blocks(concat_blocks(train_sets), concat_blocks(test_sets), spec.train);
}

std::string format_table_text(const ComparisonTable& table) {
  std::size_t width = 8;
  for (const auto& row : table.rows) width = std::max(width, row.features.size());
  std::string out;
  char line[512];
  std::snprintf(line, sizeof line, "%-*s  %s\n", static_cast<int>(width), "features", "accuracy_pct");
  out += line;
  for (const auto& row : table.rows) {
    std::snprintf(line, sizeof line, "%-*s  %.1f\n", static_cast<int>(width), row.features.c_str(),
                  100.0 * row.accuracy);
    out += line;
  }
  return out;
}

std::string format_table_csv(const ComparisonTable& table) {
  std::string out = "features,accuracy_pct\n";
  char pct[32];
  for (const auto& row : table.rows) {
    std::snprintf(pct, sizeof pct, "%.1f", 100.0 * row.accuracy);
    out += row.features + ',' + pct + '\n';
  }
  return out;
}

std::vector<NamedPath> parse_block_list(std::string_view text) {
  std::vector<NamedPath> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string_view item = text.substr(start, comma - start);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0 || eq + 1 == item.size()) {
      throw Error("block list: expected name=path, got '" + std::string(item) + "'");
    }
    out.push_back({std::string(item.substr(0, eq)), std::string(item.substr(eq + 1))});
    start = comma + 1;
  }
  return out;
}

std::map<std::string, std::string> parse_config_text(std::string_view text) {
  auto trim = [](std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return std::string();
    return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
  };
  std::map<std::string, std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Error("config line " + std::to_string(line_no) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw Error("config line " + std::to_string(line_no) + ": empty key");
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

std::map<std::string, std::string> read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config '" + path.string() + "'");
  return parse_config_text(std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()));
}

void set_thread_count(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

}  // namespace stumpboost
