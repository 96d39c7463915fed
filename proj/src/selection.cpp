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

#include "stumpboost/selection.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>

namespace stumpboost {

namespace {

void accumulate(const BinaryModel& model, FeatureSelection& out) {
  for (const auto& r : model.rounds) {
    auto& usage = out[r.stump.feature];
    ++usage.multiplicity;
    usage.vote_mass += r.alpha;
  }
}

SelectionReport build_report(const FeatureSelection& selection, std::size_t rounds,
                             const BlockManifest& manifest) {
  SelectionReport report;
  for (const auto& b : manifest.blocks()) report.blocks.push_back({b.name, 0, 0, 0.0});
  for (const auto& [feature, usage] : selection) {
    auto& block = report.blocks[manifest.block_index_of(feature)];
    ++block.distinct;
    block.multiplicity += usage.multiplicity;
    block.vote_mass += usage.vote_mass;
  }
  report.distinct_total = selection.size();
  report.rounds_total = rounds;
  return report;
}

}  // namespace

FeatureSelection selected_features(const BinaryModel& model) {
  FeatureSelection out;
  accumulate(model, out);
  return out;
}

FeatureSelection selected_features(const MultiClassModel& model) {
  FeatureSelection out;
  for (const auto& m : model.models) accumulate(m, out);
  return out;
}

SelectionReport per_block_report(const BinaryModel& model, const BlockManifest& manifest) {
  return build_report(selected_features(model), model.rounds.size(), manifest);
}

SelectionReport per_block_report(const MultiClassModel& model, const BlockManifest& manifest) {
  std::size_t rounds = 0;
  for (const auto& m : model.models) rounds += m.rounds.size();
  return build_report(selected_features(model), rounds, manifest);
}

std::vector<std::pair<std::int32_t, SelectionReport>> per_class_reports(const MultiClassModel& model,
                                                                        const BlockManifest& manifest) {
  std::vector<std::pair<std::int32_t, SelectionReport>> out;
  for (std::size_t k = 0; k < model.classes.size(); ++k) {
    out.emplace_back(model.classes[k], per_block_report(model.models[k], manifest));
  }
  return out;
}

std::string format_report_machine(const SelectionReport& report) {
  std::string out;
  char buf[64];
  for (const auto& b : report.blocks) {
    auto res = std::to_chars(buf, buf + sizeof buf, b.vote_mass);
    out += "block=" + b.name + " distinct=" + std::to_string(b.distinct) +
           " multiplicity=" + std::to_string(b.multiplicity) + " votemass=" + std::string(buf, res.ptr) + '\n';
  }
  return out;
}

std::string format_report_table(const SelectionReport& report) {
  std::size_t width = 5;
  for (const auto& b : report.blocks) width = std::max(width, b.name.size());
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-*s %10s %12s %12s\n", static_cast<int>(width), "block", "distinct",
                "multiplicity", "votemass");
  out += line;
  for (const auto& b : report.blocks) {
    std::snprintf(line, sizeof line, "%-*s %10zu %12zu %12.4f\n", static_cast<int>(width), b.name.c_str(),
                  b.distinct, b.multiplicity, b.vote_mass);
    out += line;
  }
  std::snprintf(line, sizeof line, "total: %zu distinct features over %zu rounds\n", report.distinct_total,
                report.rounds_total);
  out += line;
  return out;
}

}  // namespace stumpboost
