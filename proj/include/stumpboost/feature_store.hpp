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
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stumpboost {

/// A named, contiguous span of columns; usually one source layer.
struct Block {
  std::string name;
  std::size_t offset = 0;
  std::size_t width = 0;

  bool operator==(const Block&) const = default;
};

/// Ordered list of blocks tiling [0, total_width()) without gaps.
class BlockManifest {
 public:
  BlockManifest() = default;
  /// Throws if names are empty, duplicated, contain whitespace, or the
  /// offsets are not contiguous from 0. Zero-width blocks are rejected.
  explicit BlockManifest(std::vector<Block> blocks);

  static BlockManifest single(std::string name, std::size_t width);

  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  std::size_t total_width() const;

  /// Index of the block containing `column`; throws if outside every span.
  std::size_t block_index_of(std::size_t column) const;
  std::optional<std::size_t> find(std::string_view name) const;

  bool operator==(const BlockManifest&) const = default;

 private:
  std::vector<Block> blocks_;
};

/// Sidecar text form: one "<name> <offset> <width>" line per block.
std::string format_manifest(const BlockManifest& manifest);
BlockManifest parse_manifest(std::string_view text);

/// Dense row-major n x d matrix of finite floats with per-row class labels.
/// Immutable once constructed; the constructor enforces every invariant.
class LabeledFeatureSet {
 public:
  LabeledFeatureSet(std::size_t samples, std::size_t dims, std::vector<float> values,
                    std::vector<std::int32_t> labels, BlockManifest manifest);
  /// Same, with a single block named "default".
  LabeledFeatureSet(std::size_t samples, std::size_t dims, std::vector<float> values,
                    std::vector<std::int32_t> labels);

  std::size_t samples() const { return samples_; }
  std::size_t dims() const { return dims_; }
  std::span<const float> values() const { return values_; }
  std::span<const std::int32_t> labels() const { return labels_; }
  const BlockManifest& manifest() const { return manifest_; }

  std::span<const float> row(std::size_t i) const {
    return std::span<const float>(values_).subspan(i * dims_, dims_);
  }
  float at(std::size_t i, std::size_t j) const { return values_[i * dims_ + j]; }

  /// max label + 1; class ids may have gaps.
  std::size_t class_count() const;
  /// Distinct labels present, ascending.
  std::vector<std::int32_t> class_ids() const;

  bool operator==(const LabeledFeatureSet&) const;

 private:
  std::size_t samples_;
  std::size_t dims_;
  std::vector<float> values_;
  std::vector<std::int32_t> labels_;
  BlockManifest manifest_;
};

enum class FeatureFormat { binary, csv };

/// csv for a ".csv" extension, binary otherwise.
FeatureFormat format_for_path(const std::filesystem::path& path);

/// Reads an FVB1 or CSV file plus its optional "<path>.manifest" sidecar.
LabeledFeatureSet load_features(const std::filesystem::path& path, FeatureFormat format);
LabeledFeatureSet load_features(const std::filesystem::path& path);

/// Writes the canonical FVB1 file and its manifest sidecar.
void save_features(const LabeledFeatureSet& set, const std::filesystem::path& path);
/// CSV writer for small fixtures; also writes the sidecar.
void save_features_csv(const LabeledFeatureSet& set, const std::filesystem::path& path);

BlockManifest read_manifest_file(const std::filesystem::path& path);

/// Column-wise concatenation; rows and labels must agree across inputs.
LabeledFeatureSet concat_blocks(std::span<const LabeledFeatureSet> sets);

struct SplitResult {
  LabeledFeatureSet train;
  LabeledFeatureSet test;
};

/// Per-class split. Each class's member rows (ascending) are shuffled with
/// std::mt19937_64 seeded by stream_seed(seed, class id) and a Fisher-Yates
/// pass; the first train_count go to train, the next test_count (or all the
/// rest) to test. Output rows keep their original relative order.
SplitResult split_per_class(const LabeledFeatureSet& set, std::size_t train_count,
                            std::optional<std::size_t> test_count, std::uint64_t seed);

LabeledFeatureSet take_rows(const LabeledFeatureSet& set, std::span<const std::size_t> rows);
/// Columns of one named block, as a single-block set.
LabeledFeatureSet slice_block(const LabeledFeatureSet& set, std::string_view name);
/// Same matrix with the manifest replaced by one block called `name`.
LabeledFeatureSet rename_as_block(const LabeledFeatureSet& set, std::string name);
/// Drops every row whose label is in `classes`.
LabeledFeatureSet drop_classes(const LabeledFeatureSet& set, std::span<const std::int32_t> classes);

}  // namespace stumpboost
