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

#include <numeric>

#include "doctest.h"
#include "stumpboost/common.hpp"
#include "stumpboost/selection.hpp"
#include "test_util.hpp"

using namespace stumpboost;

namespace {

BinaryModel model_on(std::vector<std::size_t> features, std::vector<double> alphas) {
  BinaryModel m;
  for (std::size_t k = 0; k < features.size(); ++k) {
    m.rounds.push_back({Stump{features[k], 0.0, 1}, alphas[k]});
    m.trace.push_back({0.1, alphas[k], 1.0});
  }
  return m;
}

}  // namespace

TEST_CASE("selected_features aggregates per index") {
  const auto sel = selected_features(model_on({7, 7, 12}, {0.5, 0.2, 0.4}));
  REQUIRE(sel.size() == 2);
  CHECK(sel.at(7).multiplicity == 2);
  CHECK(sel.at(7).vote_mass == doctest::Approx(0.7));
  CHECK(sel.at(12) == FeatureUsage{1, 0.4});
  CHECK(selected_features(BinaryModel{}).empty());

  MultiClassModel mc;
  mc.classes = {0, 1};
  mc.models = {model_on({3}, {1.0}), model_on({3, 4}, {0.5, 0.25})};
  const auto all = selected_features(mc);
  CHECK(all.at(3) == FeatureUsage{2, 1.5});
  CHECK(all.at(4) == FeatureUsage{1, 0.25});
}

TEST_CASE("per_block_report") {
  const BlockManifest fc({{"FC6", 0, 4096}, {"FC7", 4096, 4096}});
  SUBCASE("span lookup") {
    const auto r = per_block_report(model_on({10, 5000}, {0.3, 0.6}), fc);
    CHECK(r.blocks[0].name == "FC6");
    CHECK(r.blocks[0].distinct == 1);
    CHECK(r.blocks[1].distinct == 1);
    CHECK(r.blocks[1].vote_mass == 0.6);
    CHECK(r.distinct_total == 2);
    CHECK(r.rounds_total == 2);
    CHECK(format_report_machine(r) ==
          "block=FC6 distinct=1 multiplicity=1 votemass=0.3\n"
          "block=FC7 distinct=1 multiplicity=1 votemass=0.6\n");
  }
  SUBCASE("untouched blocks report zero") {
    const auto r = per_block_report(model_on({1, 2, 2}, {0.1, 0.1, 0.1}), fc);
    CHECK(r.blocks[0].distinct == 2);
    CHECK(r.blocks[0].multiplicity == 3);
    CHECK(r.blocks[1].distinct == 0);
    CHECK(r.blocks[1].vote_mass == 0.0);
    CHECK(format_report_table(r).find("total: 2 distinct features over 3 rounds") != std::string::npos);
  }
  SUBCASE("feature outside the manifest") {
    CHECK_THROWS_AS(per_block_report(model_on({8192}, {1.0}), fc), Error);
  }
}

TEST_CASE("property: blocks partition the selection and conserve vote mass") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto set = stumpboost::testing::random_real_set(rng, 80, 12, 3);
    const std::size_t cut = 1 + rng() % 10;
    const LabeledFeatureSet blocked(set.samples(), set.dims(),
                                    std::vector<float>(set.values().begin(), set.values().end()),
                                    std::vector<std::int32_t>(set.labels().begin(), set.labels().end()),
                                    BlockManifest({{"a", 0, cut}, {"b", cut, 12 - cut}}));
    TrainConfig config;
    config.rounds = 12;
    const auto model = train_ovr(blocked, config);
    const auto report = per_block_report(model, blocked.manifest());
    std::size_t distinct = 0;
    double mass = 0.0;
    for (const auto& b : report.blocks) {
      distinct += b.distinct;
      mass += b.vote_mass;
    }
    double alpha_sum = 0.0;
    std::size_t rounds = 0;
    for (const auto& m : model.models) {
      for (const auto& r : m.rounds) alpha_sum += r.alpha;
      rounds += m.rounds.size();
    }
    CHECK(distinct == report.distinct_total);
    CHECK(report.distinct_total <= report.rounds_total);
    CHECK(report.rounds_total == rounds);
    CHECK(mass == doctest::Approx(alpha_sum).epsilon(1e-12));

    const auto per_class = per_class_reports(model, blocked.manifest());
    CHECK(per_class.size() == 3);
    std::size_t class_rounds = 0;
    for (const auto& [label, r] : per_class) class_rounds += r.rounds_total;
    CHECK(class_rounds == rounds);
  }
}
