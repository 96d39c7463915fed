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

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>

#include "stumpboost/common.hpp"
#include "stumpboost/feature_store.hpp"

namespace stumpboost {

namespace fs = std::filesystem;

namespace {

constexpr std::array<char, 4> kMagic = {'F', 'V', 'B', '1'};
constexpr std::size_t kHeaderBytes = 12;

std::uint32_t read_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

void write_u32(std::string& out, std::uint32_t v) {
  for (int shift = 0; shift < 32; shift += 8) out.push_back(static_cast<char>((v >> shift) & 0xFFu));
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const fs::path& path, const std::string& bytes, std::ios::openmode mode) {
  std::ofstream out(path, mode | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("write failed for '" + path.string() + "'");
}

fs::path sidecar_path(const fs::path& path) {
  return fs::path(path.string() + ".manifest");
}

BlockManifest sidecar_or_default(const fs::path& path, std::size_t dims) {
  const auto sidecar = sidecar_path(path);
  if (!fs::exists(sidecar)) return BlockManifest::single("default", dims);
  return read_manifest_file(sidecar);
}

LabeledFeatureSet load_binary(const fs::path& path) {
  const std::string bytes = read_file(path);
  if (bytes.size() < kHeaderBytes || !std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) {
    throw Error("'" + path.string() + "': bad magic");
  }
  const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
  const std::uint64_t n = read_u32(p + 4);
  const std::uint64_t d = read_u32(p + 8);
  const std::uint64_t expected = kHeaderBytes + 4 * n + 4 * n * d;
  if (bytes.size() != expected) {
    throw Error("'" + path.string() + "': dimension mismatch, header n=" + std::to_string(n) +
                " d=" + std::to_string(d) + " needs " + std::to_string(expected) + " bytes, file has " +
                std::to_string(bytes.size()));
  }
  p += kHeaderBytes;
  std::vector<std::int32_t> labels(n);
  for (std::uint64_t i = 0; i < n; ++i, p += 4) {
    labels[i] = std::bit_cast<std::int32_t>(read_u32(p));
    if (labels[i] < 0) {
      throw Error("'" + path.string() + "': label out of range at row " + std::to_string(i) + ": " +
                  std::to_string(labels[i]));
    }
  }
  std::vector<float> values(n * d);
  for (std::uint64_t k = 0; k < n * d; ++k, p += 4) values[k] = std::bit_cast<float>(read_u32(p));
  return LabeledFeatureSet(n, d, std::move(values), std::move(labels), sidecar_or_default(path, d));
}

LabeledFeatureSet load_csv(const fs::path& path) {
  std::istringstream in(read_file(path));
  std::string line;
  if (!std::getline(in, line)) throw Error("'" + path.string() + "': missing CSV header");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  std::size_t d = 0;
  {
    std::istringstream header(line);
    std::string field;
    std::size_t col = 0;
    while (std::getline(header, field, ',')) {
      const std::string want = col == 0 ? "label" : "f" + std::to_string(col - 1);
      if (field != want) {
        throw Error("'" + path.string() + "': bad CSV header, column " + std::to_string(col) +
                    " is '" + field + "', expected '" + want + "'");
      }
      ++col;
    }
    if (col < 2) throw Error("'" + path.string() + "': CSV header has no feature columns");
    d = col - 1;
  }

  std::vector<float> values;
  std::vector<std::int32_t> labels;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const char* cur = line.data();
    const char* end = line.data() + line.size();
    for (std::size_t col = 0; col <= d; ++col) {
      const char* stop = std::find(cur, end, ',');
      if (col == 0) {
        long long label = 0;
        auto [ptr, ec] = std::from_chars(cur, stop, label);
        if (ec != std::errc() || ptr != stop || label < 0 || label > INT32_MAX) {
          throw Error("'" + path.string() + "': label out of range at row " + std::to_string(row));
        }
        labels.push_back(static_cast<std::int32_t>(label));
      } else {
        float v = 0;
        auto [ptr, ec] = std::from_chars(cur, stop, v);
        if (ec != std::errc() || ptr != stop) {
          throw Error("'" + path.string() + "': unparsable value at row " + std::to_string(row) +
                      ", column " + std::to_string(col - 1));
        }
        values.push_back(v);
      }
      if (col < d && stop == end) {
        throw Error("'" + path.string() + "': dimension mismatch at row " + std::to_string(row));
      }
      cur = stop == end ? end : stop + 1;
      if (col == d && stop != end) {
        throw Error("'" + path.string() + "': dimension mismatch at row " + std::to_string(row));
      }
    }
    ++row;
  }
  return LabeledFeatureSet(row, d, std::move(values), std::move(labels), sidecar_or_default(path, d));
}

}  // namespace

FeatureFormat format_for_path(const fs::path& path) {
  return path.extension() == ".csv" ? FeatureFormat::csv : FeatureFormat::binary;
}

LabeledFeatureSet load_features(const fs::path& path, FeatureFormat format) {
  return format == FeatureFormat::csv ? load_csv(path) : load_binary(path);
}

LabeledFeatureSet load_features(const fs::path& path) {
  return load_features(path, format_for_path(path));
}

BlockManifest read_manifest_file(const fs::path& path) {
  try {
    return parse_manifest(read_file(path));
  } catch (const Error& e) {
    throw Error("'" + path.string() + "': " + e.what());
  }
}

void save_features(const LabeledFeatureSet& set, const fs::path& path) {
  const std::size_t n = set.samples();
  const std::size_t d = set.dims();
  if (n > UINT32_MAX || d > UINT32_MAX) throw Error("set too large for FVB1");
  std::string bytes(kMagic.begin(), kMagic.end());
  bytes.reserve(kHeaderBytes + 4 * n * (d + 1));
  write_u32(bytes, static_cast<std::uint32_t>(n));
  write_u32(bytes, static_cast<std::uint32_t>(d));
  for (auto label : set.labels()) write_u32(bytes, std::bit_cast<std::uint32_t>(label));
  for (auto v : set.values()) write_u32(bytes, std::bit_cast<std::uint32_t>(v));
  write_file(path, bytes, std::ios::binary);
  write_file(sidecar_path(path), format_manifest(set.manifest()), std::ios::out);
}

void save_features_csv(const LabeledFeatureSet& set, const fs::path& path) {
  std::string out = "label";
  for (std::size_t j = 0; j < set.dims(); ++j) out += ",f" + std::to_string(j);
  out += '\n';
  char buf[64];
  for (std::size_t i = 0; i < set.samples(); ++i) {
    out += std::to_string(set.labels()[i]);
    for (float v : set.row(i)) {
      auto res = std::to_chars(buf, buf + sizeof buf, v);
      out += ',';
      out.append(buf, res.ptr);
    }
    out += '\n';
  }
  write_file(path, out, std::ios::out);
  write_file(sidecar_path(path), format_manifest(set.manifest()), std::ios::out);
}

}  // namespace stumpboost
