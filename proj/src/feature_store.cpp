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

#include "stumpboost/feature_store.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "stumpboost/common.hpp"
#include "stumpboost/rng.hpp"

namespace stumpboost {

namespace {

bool has_space(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

BlockManifest::BlockManifest(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  std::set<std::string_view> names;
  std::size_t expected = 0;
  for (const auto& b : blocks_) {
    if (b.name.empty()) throw Error("manifest: empty block name");
    if (has_space(b.name)) throw Error("manifest: block name '" + b.name + "' contains whitespace");
    if (!names.insert(b.name).second) throw Error("manifest: duplicate block name '" + b.name + "'");
    if (b.offset != expected) {
      throw Error("manifest: block '" + b.name + "' starts at " + std::to_string(b.offset) +
                  ", expected " + std::to_string(expected));
    }
    if (b.width == 0) throw Error("manifest: block '" + b.name + "' has zero width");
    expected += b.width;
  }
}

BlockManifest BlockManifest::single(std::string name, std::size_t width) {
  return BlockManifest({Block{std::move(name), 0, width}});
}

std::size_t BlockManifest::total_width() const {
  return blocks_.empty() ? 0 : blocks_.back().offset + blocks_.back().width;
}

std::size_t BlockManifest::block_index_of(std::size_t column) const {
  auto it = std::upper_bound(blocks_.begin(), blocks_.end(), column,
                             [](std::size_t c, const Block& b) { return c < b.offset + b.width; });
  if (it == blocks_.end()) {
    throw Error("column " + std::to_string(column) + " lies outside the manifest (width " +
                std::to_string(total_width()) + ")");
  }
  return static_cast<std::size_t>(it - blocks_.begin());
}

std::optional<std::size_t> BlockManifest::find(std::string_view name) const {
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (blocks_[k].name == name) return k;
  }
  return std::nullopt;
}

std::string format_manifest(const BlockManifest& manifest) {
  std::string out;
  for (const auto& b : manifest.blocks()) {
    out += b.name + ' ' + std::to_string(b.offset) + ' ' + std::to_string(b.width) + '\n';
  }
  return out;
}

BlockManifest parse_manifest(std::string_view text) {
  std::vector<Block> blocks;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::istringstream fields(line);
    Block b;
    std::string extra;
    long long offset = -1;
    long long width = -1;
    if (!(fields >> b.name >> offset >> width) || (fields >> extra) || offset < 0 || width < 0) {
      throw Error("manifest line " + std::to_string(line_no) + ": expected '<name> <offset> <width>'");
    }
    b.offset = static_cast<std::size_t>(offset);
    b.width = static_cast<std::size_t>(width);
    blocks.push_back(std::move(b));
  }
  return BlockManifest(std::move(blocks));
}

LabeledFeatureSet::LabeledFeatureSet(std::size_t samples, std::size_t dims, std::vector<float> values,
                                     std::vector<std::int32_t> labels, BlockManifest manifest)
    : samples_(samples),
      dims_(dims),
      values_(std::move(values)),
      labels_(std::move(labels)),
      manifest_(std::move(manifest)) {
  if (samples_ == 0 || dims_ == 0) throw Error("empty set (n=" + std::to_string(samples_) +
                                               ", d=" + std::to_string(dims_) + ")");
  if (values_.size() != samples_ * dims_) {
    throw Error("dimension mismatch: " + std::to_string(values_.size()) + " values for n=" +
                std::to_string(samples_) + ", d=" + std::to_string(dims_));
  }
  if (labels_.size() != samples_) {
    throw Error("dimension mismatch: " + std::to_string(labels_.size()) + " labels for n=" +
                std::to_string(samples_));
  }
  for (std::size_t i = 0; i < samples_; ++i) {
    if (labels_[i] < 0) {
      throw Error("label out of range at row " + std::to_string(i) + ": " + std::to_string(labels_[i]));
    }
  }
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (!std::isfinite(values_[k])) {
      throw Error("non-finite value at row " + std::to_string(k / dims_) + ", column " +
                  std::to_string(k % dims_));
    }
  }
  if (manifest_.total_width() != dims_) {
    throw Error("manifest covers " + std::to_string(manifest_.total_width()) + " columns, set has " +
                std::to_string(dims_));
  }
}

LabeledFeatureSet::LabeledFeatureSet(std::size_t samples, std::size_t dims, std::vector<float> values,
                                     std::vector<std::int32_t> labels)
    : LabeledFeatureSet(samples, dims, std::move(values), std::move(labels),
                        dims == 0 ? BlockManifest() : BlockManifest::single("default", dims)) {}

std::size_t LabeledFeatureSet::class_count() const {
  return static_cast<std::size_t>(*std::max_element(labels_.begin(), labels_.end())) + 1;
}

std::vector<std::int32_t> LabeledFeatureSet::class_ids() const {
  std::vector<std::int32_t> ids(labels_.begin(), labels_.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

bool LabeledFeatureSet::operator==(const LabeledFeatureSet& other) const {
  if (samples_ != other.samples_ || dims_ != other.dims_ || labels_ != other.labels_ ||
      manifest_ != other.manifest_) {
    return false;
  }
  return std::equal(values_.begin(), values_.end(), other.values_.begin(), [](float a, float b) {
    return std::bit_cast<std::uint32_t>(a) == std::bit_cast<std::uint32_t>(b);
  });
}

LabeledFeatureSet concat_blocks(std::span<const LabeledFeatureSet> sets) {
  if (sets.empty()) throw Error("concat_blocks: no input sets");
  const auto& first = sets.front();
  const std::size_t n = first.samples();
  std::vector<Block> blocks;
  std::set<std::string> names;
  std::size_t d = 0;
  for (std::size_t s = 0; s < sets.size(); ++s) {
    const auto& set = sets[s];
    if (set.samples() != n) {
      throw Error("concat_blocks: sample-count mismatch (input 0 has " + std::to_string(n) + ", input " +
                  std::to_string(s) + " has " + std::to_string(set.samples()) + ")");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (set.labels()[i] != first.labels()[i]) {
        throw Error("concat_blocks: label mismatch at row " + std::to_string(i) + " (input " +
                    std::to_string(s) + ")");
      }
    }
    for (const auto& b : set.manifest().blocks()) {
      if (!names.insert(b.name).second) throw Error("concat_blocks: duplicate block name '" + b.name + "'");
      blocks.push_back(Block{b.name, d + b.offset, b.width});
    }
    d += set.dims();
  }

  std::vector<float> values;
  values.reserve(n * d);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& set : sets) {
      auto row = set.row(i);
      values.insert(values.end(), row.begin(), row.end());
    }
  }
  std::vector<std::int32_t> labels(first.labels().begin(), first.labels().end());
  return LabeledFeatureSet(n, d, std::move(values), std::move(labels), BlockManifest(std::move(blocks)));
}

LabeledFeatureSet take_rows(const LabeledFeatureSet& set, std::span<const std::size_t> rows) {
  const std::size_t d = set.dims();
  std::vector<float> values;
  values.reserve(rows.size() * d);
  std::vector<std::int32_t> labels;
  labels.reserve(rows.size());
  for (auto i : rows) {
    if (i >= set.samples()) throw Error("take_rows: row " + std::to_string(i) + " out of range");
    auto row = set.row(i);
    values.insert(values.end(), row.begin(), row.end());
    labels.push_back(set.labels()[i]);
  }
  return LabeledFeatureSet(rows.size(), d, std::move(values), std::move(labels), set.manifest());
}

SplitResult split_per_class(const LabeledFeatureSet& set, std::size_t train_count,
                            std::optional<std::size_t> test_count, std::uint64_t seed) {
  if (train_count == 0) throw Error("split_per_class: train_count must be positive");
  if (test_count && *test_count == 0) throw Error("split_per_class: test_count must be positive");

  const auto ids = set.class_ids();
  std::vector<std::vector<std::size_t>> members(set.class_count());
  for (std::size_t i = 0; i < set.samples(); ++i) {
    members[static_cast<std::size_t>(set.labels()[i])].push_back(i);
  }

  const std::size_t need = train_count + test_count.value_or(0);
  std::vector<std::size_t> train_rows;
  std::vector<std::size_t> test_rows;
  for (auto c : ids) {
    auto& rows = members[static_cast<std::size_t>(c)];
    if (rows.size() < need) {
      throw Error("split_per_class: class " + std::to_string(c) + " has " + std::to_string(rows.size()) +
                  " samples, needs " + std::to_string(need));
    }
    std::mt19937_64 engine(stream_seed(seed, static_cast<std::uint64_t>(c)));
    shuffle(rows.begin(), rows.end(), engine);
    const std::size_t test_end = test_count ? need : rows.size();
    train_rows.insert(train_rows.end(), rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(train_count));
    test_rows.insert(test_rows.end(), rows.begin() + static_cast<std::ptrdiff_t>(train_count),
                     rows.begin() + static_cast<std::ptrdiff_t>(test_end));
  }
  if (test_rows.empty()) throw Error("split_per_class: no samples left for the test set");
  std::sort(train_rows.begin(), train_rows.end());
  std::sort(test_rows.begin(), test_rows.end());
  return SplitResult{take_rows(set, train_rows), take_rows(set, test_rows)};
}

LabeledFeatureSet slice_block(const LabeledFeatureSet& set, std::string_view name) {
  const auto index = set.manifest().find(name);
  if (!index) throw Error("no block named '" + std::string(name) + "'");
  const Block& block = set.manifest().blocks()[*index];
  std::vector<float> values;
  values.reserve(set.samples() * block.width);
  for (std::size_t i = 0; i < set.samples(); ++i) {
    auto row = set.row(i).subspan(block.offset, block.width);
    values.insert(values.end(), row.begin(), row.end());
  }
  std::vector<std::int32_t> labels(set.labels().begin(), set.labels().end());
  return LabeledFeatureSet(set.samples(), block.width, std::move(values), std::move(labels),
                           BlockManifest::single(block.name, block.width));
}

LabeledFeatureSet rename_as_block(const LabeledFeatureSet& set, std::string name) {
  std::vector<float> values(set.values().begin(), set.values().end());
  std::vector<std::int32_t> labels(set.labels().begin(), set.labels().end());
  return LabeledFeatureSet(set.samples(), set.dims(), std::move(values), std::move(labels),
                           BlockManifest::single(std::move(name), set.dims()));
}

LabeledFeatureSet drop_classes(const LabeledFeatureSet& set, std::span<const std::int32_t> classes) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < set.samples(); ++i) {
    if (std::find(classes.begin(), classes.end(), set.labels()[i]) == classes.end()) keep.push_back(i);
  }
  if (keep.empty()) throw Error("drop_classes: every sample was dropped");
  return take_rows(set, keep);
}

}  // namespace stumpboost
