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

#include <cmath>
#include <set>

#include "doctest.h"
#include "stumpboost/adaboost.hpp"
#include "stumpboost/common.hpp"
#include "stumpboost/harness.hpp"
#include "stumpboost/model_io.hpp"
#include "stumpboost/selection.hpp"
#include "test_util.hpp"

using namespace stumpboost;
using namespace stumpboost::testing;

namespace {

TrainConfig rounds(std::size_t t) {
  TrainConfig c;
  c.rounds = t;
  return c;
}

BinaryModel constant_model(std::vector<std::pair<int, double>> polarity_alpha) {
  BinaryModel m;
  for (auto [p, a] : polarity_alpha) {
    m.rounds.push_back({Stump{0, kSentinelThreshold, p}, a});
    m.trace.push_back({0.1, a, 1.0});
  }
  return m;
}

// Each class c is flagged by its own indicator column c.
LabeledFeatureSet indicator_set(std::size_t classes, std::size_t per_class, std::mt19937_64& rng) {
  std::uniform_real_distribution<float> jitter(0.0f, 0.2f);
  std::vector<float> values;
  std::vector<std::int32_t> labels;
  for (std::size_t c = 0; c < classes; ++c) {
    for (std::size_t i = 0; i < per_class; ++i) {
      for (std::size_t j = 0; j < classes; ++j) values.push_back((j == c ? 1.0f : 0.0f) + jitter(rng));
      labels.push_back(static_cast<std::int32_t>(c));
    }
  }
  return LabeledFeatureSet(labels.size(), classes, values, labels);
}

}  // namespace

TEST_CASE("TrainConfig validation") {
  CHECK_THROWS_AS(rounds(0).validate(), Error);
  TrainConfig c;
  CHECK(c.rounds == 256);
  CHECK(c.epsilon_clamp == 1e-10);
  CHECK_NOTHROW(c.validate());
  c.epsilon_clamp = 0.5;
  CHECK_THROWS_AS(c.validate(), Error);
  c.epsilon_clamp = 0.0;
  CHECK_THROWS_AS(c.validate(), Error);
  const auto set = from_rows({{1}, {2}}, {0, 1});
  CHECK_THROWS_AS(train_binary(set, std::vector<int>{1, -1}, rounds(0)), Error);
}

TEST_CASE("one round on a separable line") {
  const auto set = from_rows({{1}, {2}, {3}, {4}}, {0, 0, 1, 1});
  const std::vector<int> y{-1, -1, 1, 1};
  const auto model = train_binary(set, y, rounds(1));
  REQUIRE(model.rounds.size() == 1);
  CHECK(model.rounds[0].stump == Stump{0, 2.5, 1});
  CHECK(model.trace[0].error == 0.0);
  // eps clamped to 1e-10
  CHECK(model.rounds[0].alpha == doctest::Approx(0.5 * std::log((1 - 1e-10) / 1e-10)).epsilon(1e-14));
  CHECK(staged_errors(model, set, y) == std::vector<double>{0.0});
  for (std::size_t i = 0; i < 4; ++i) CHECK(predict_binary(model, set.row(i)) == y[i]);
}

TEST_CASE("XOR stops before the first round") {
  const auto set = from_rows({{0, 0}, {0, 1}, {1, 0}, {1, 1}}, {0, 1, 1, 0});
  const std::vector<int> y{-1, 1, 1, -1};
  CHECK(fit_stump_oracle(set, y, uniform_weights(4)).weighted_error == 0.5);
  const auto model = train_binary(set, y, rounds(10));
  CHECK(model.empty());
  CHECK(model.trace.empty());
  CHECK(predict_binary(model, set.row(0)) == 1);
}

TEST_CASE("hand-computed update for eps = 0.25") {
  const auto set = from_rows({{1}, {2}, {3}, {4}}, {0, 0, 1, 0});
  const std::vector<int> y{-1, -1, 1, -1};
  std::vector<double> after;
  const auto model = train_binary(set, y, rounds(1), nullptr,
                                  [&](std::size_t, std::span<const double> w) { after.assign(w.begin(), w.end()); });
  REQUIRE(model.rounds.size() == 1);
  CHECK(model.trace[0].error == 0.25);
  CHECK(std::abs(model.rounds[0].alpha - 0.5 * std::log(3.0)) <= 1e-12);
  // The constant -1 stump misclassifies sample 2 only.
  const std::vector<double> expected{1.0 / 6, 1.0 / 6, 0.5, 1.0 / 6};
  REQUIRE(after.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(after[i] - expected[i]) <= 1e-12);
  CHECK(model.trace[0].loss_bound == doctest::Approx(2 * std::sqrt(0.25 * 0.75)));
}

TEST_CASE("decision_score and predict_binary") {
  const float x[] = {0.0f};
  CHECK(decision_score(BinaryModel{}, x) == 0.0);
  CHECK(predict_binary(BinaryModel{}, x) == 1);
  CHECK(decision_score(constant_model({{1, 0.5}}), x) == 0.5);
  const auto two = constant_model({{1, 0.5}, {-1, 0.3}});
  CHECK(decision_score(two, x) == doctest::Approx(0.2));
  CHECK(predict_binary(two, x) == 1);
  CHECK(predict_binary(constant_model({{-1, 0.5}, {1, 0.3}}), x) == -1);
  BinaryModel out_of_range;
  out_of_range.rounds.push_back({Stump{3, 0.0, 1}, 1.0});
  CHECK_THROWS_AS(decision_score(out_of_range, x), Error);
}

TEST_CASE("train_ovr and predict_multiclass") {
  std::mt19937_64 rng(8);
  SUBCASE("one model per class") {
    const auto set = random_real_set(rng, 30, 4, 2);
    CHECK(train_ovr(set, rounds(3)).models.size() == 2);
    CHECK_THROWS_AS(train_ovr(from_rows({{1}, {2}}, {3, 3}), rounds(3)), Error);
  }
  SUBCASE("257 classes") {
    const auto set = random_real_set(rng, 257 * 2, 3, 1);
    std::vector<float> v(set.values().begin(), set.values().end());
    std::vector<std::int32_t> labels(set.samples());
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<std::int32_t>(i / 2);
    const auto model = train_ovr(LabeledFeatureSet(set.samples(), 3, v, labels), rounds(2));
    CHECK(model.models.size() == 257);
    for (const auto& m : model.models) CHECK(m.rounds.size() <= 2);
  }
  SUBCASE("indicator features separate three classes") {
    const auto train = indicator_set(3, 20, rng);
    const auto test = indicator_set(3, 10, rng);
    const auto model = train_ovr(train, rounds(5));
    CHECK(evaluate(model, test) == 1.0);
  }
  SUBCASE("argmax with lowest-id ties") {
    MultiClassModel m;
    m.dims = 1;
    m.classes = {0, 1};
    const float x[] = {0.0f};
    m.models = {constant_model({{1, 1.2}}), constant_model({{1, 0.7}})};
    CHECK(predict_multiclass(m, x) == 0);
    m.models = {constant_model({{1, 1.2}}), constant_model({{1, 1.2}})};
    CHECK(predict_multiclass(m, x) == 0);
    m.models = {constant_model({{-1, 0.5}}), constant_model({{-1, 0.1}})};
    CHECK(predict_multiclass(m, x) == 1);
    m.classes = {4, 9};
    m.models = {BinaryModel{}, BinaryModel{}};
    CHECK(predict_multiclass(m, x) == 4);
  }
}

TEST_CASE("boosting invariants on random problems") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 5 + rng() % 120;
    const auto set = random_real_set(rng, n, 1 + rng() % 30);
    const auto y = random_targets(rng, n);
    bool sums_ok = true;
    const auto model = train_binary(set, y, rounds(30), nullptr, [&](std::size_t, std::span<const double> w) {
      double s = 0.0;
      for (double x : w) s += x;
      sums_ok = sums_ok && std::abs(s - 1.0) <= 1e-9;
    });
    CHECK(sums_ok);
    CHECK(model.trace.size() == model.rounds.size());
    const auto staged = staged_errors(model, set, y);
    for (std::size_t t = 0; t < model.rounds.size(); ++t) {
      CHECK(model.trace[t].error < 0.5);
      CHECK(model.rounds[t].alpha >= 0.0);
      CHECK(staged[t] <= model.trace[t].loss_bound + 1e-12);
    }
    CHECK(selected_features(model).size() <= model.rounds.size());
  }
  CHECK(staged_errors(BinaryModel{}, from_rows({{1}}, {0}), std::vector<int>{1}).empty());
}

TEST_CASE("appending a duplicate of every column changes nothing") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 5; ++trial) {
    const std::size_t n = 20 + rng() % 60;
    const auto base = random_real_set(rng, n, 6);
    const auto set = rename_as_block(base, "orig");
    const LabeledFeatureSet parts[] = {set, rename_as_block(base, "copy")};
    const auto doubled = concat_blocks(parts);
    const auto y = random_targets(rng, n);
    CHECK(train_binary(set, y, rounds(20)) == train_binary(doubled, y, rounds(20)));
  }
}

TEST_CASE("training is deterministic across thread counts") {
  std::mt19937_64 rng(5);
  const auto set = random_real_set(rng, 200, 40, 4);
  set_thread_count(1);
  const auto one = train_ovr(set, rounds(15));
  set_thread_count(4);
  const auto four = train_ovr(set, rounds(15));
  set_thread_count(0);
  CHECK(one == four);
  CHECK(serialize_model(one) == serialize_model(four));
}

TEST_CASE("model text round trip") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 5; ++trial) {
    const auto set = random_real_set(rng, 60, 8, 3);
    auto model = train_ovr(set, rounds(10));
    model.models[0].rounds.insert(model.models[0].rounds.begin(), {Stump{2, kSentinelThreshold, -1}, 0.125});
    model.models[0].trace.insert(model.models[0].trace.begin(), {0.375, 0.125, 0.9});
    const auto text = serialize_model(model);
    CHECK(parse_model(text) == model);
    CHECK(serialize_model(parse_model(text)) == text);
  }
  TempDir dir;
  const auto model = train_ovr(random_real_set(rng, 40, 3, 2), rounds(4));
  save_model(model, dir / "m.txt");
  CHECK(load_model(dir / "m.txt") == model);
}

TEST_CASE("model parse errors") {
  CHECK_THROWS_AS(parse_model("nonsense\n"), Error);
  const std::string head = "STUMPBOOST-MODEL v1\nrounds 4\ndims 2\nclasses 0 1\n";
  CHECK_NOTHROW(parse_model(head));
  CHECK(parse_model(head + "class 1 round 0 feature 1 threshold -inf polarity -1 alpha 0.5 error 0.2 bound 0.8\n")
            .model_for(1)
            .rounds[0]
            .stump.is_constant());
  CHECK_THROWS_AS(parse_model(head + "class 2 round 0 feature 1 threshold 0 polarity 1 alpha 0.5 error 0 bound 1\n"), Error);
  CHECK_THROWS_AS(parse_model(head + "class 0 round 0 feature 2 threshold 0 polarity 1 alpha 0.5 error 0 bound 1\n"), Error);
  CHECK_THROWS_AS(parse_model(head + "class 0 round 1 feature 0 threshold 0 polarity 1 alpha 0.5 error 0 bound 1\n"), Error);
  CHECK_THROWS_AS(parse_model(head + "class 0 round 0 feature 0 threshold 0 polarity 0 alpha 0.5 error 0 bound 1\n"), Error);
  CHECK_THROWS_AS(parse_model(head + "class 0 round 0 feature 0 threshold 0 polarity 1 alpha -1 error 0 bound 1\n"), Error);
}
