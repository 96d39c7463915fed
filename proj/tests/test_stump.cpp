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
#include <cmath>
#include <numeric>

#include "doctest.h"
#include "stumpboost/common.hpp"
#include "stumpboost/stump.hpp"
#include "test_util.hpp"

using namespace stumpboost;
using namespace stumpboost::testing;

namespace {

// Set of samples a stump sends to the "> threshold" side.
std::vector<bool> upper_side(const LabeledFeatureSet& set, const Stump& s) {
  std::vector<bool> side(set.samples());
  for (std::size_t i = 0; i < set.samples(); ++i) side[i] = set.at(i, s.feature) > s.threshold;
  return side;
}

}  // namespace

TEST_CASE("presort") {
  SUBCASE("ascending order") {
    const auto set = from_rows({{3.0f}, {1.0f}, {2.0f}}, {0, 0, 0});
    const auto sorted = presort(set);
    CHECK(std::vector<std::uint32_t>(sorted.order(0).begin(), sorted.order(0).end()) ==
          std::vector<std::uint32_t>{1, 2, 0});
  }
  SUBCASE("ties keep sample order") {
    const auto set = from_rows({{5.0f}, {5.0f}, {5.0f}}, {0, 0, 0});
    const auto sorted = presort(set);
    CHECK(std::vector<std::uint32_t>(sorted.order(0).begin(), sorted.order(0).end()) ==
          std::vector<std::uint32_t>{0, 1, 2});
  }
  SUBCASE("random 50x20 agrees with a generic sort") {
    std::mt19937_64 rng(1);
    const auto set = random_grid_set(rng, 50, 20);
    const auto sorted = presort(set);
    const auto serial = presort_serial(set);
    for (std::size_t j = 0; j < set.dims(); ++j) {
      std::vector<std::pair<float, std::uint32_t>> oracle;
      for (std::uint32_t i = 0; i < 50; ++i) oracle.emplace_back(set.at(i, j), i);
      std::sort(oracle.begin(), oracle.end());  // (value, index) lexicographic == stable
      auto order = sorted.order(j);
      auto values = sorted.sorted_values(j);
      for (std::size_t k = 0; k < 50; ++k) {
        CHECK(order[k] == oracle[k].second);
        CHECK(values[k] == oracle[k].first);
        CHECK(serial.order(j)[k] == order[k]);
        if (k > 0) CHECK(values[k - 1] <= values[k]);
      }
    }
  }
}

TEST_CASE("stump_predict") {
  const Stump up{0, 2.5, 1};
  const float three[] = {3.0f};
  const float boundary[] = {2.5f};
  CHECK(stump_predict(up, three) == 1);
  CHECK(stump_predict(up, boundary) == -1);
  CHECK(stump_predict(Stump{0, 2.5, -1}, three) == -1);
  CHECK(stump_predict(Stump{0, kSentinelThreshold, 1}, boundary) == 1);
  CHECK_THROWS_AS(stump_predict(Stump{1, 0.0, 1}, three), Error);
}

TEST_CASE("fit_stump worked examples") {
  SUBCASE("separable single feature") {
    const auto set = from_rows({{1}, {2}, {3}, {4}}, {0, 0, 1, 1});
    const std::vector<int> y{-1, -1, 1, 1};
    const auto w = uniform_weights(4);
    const auto fit = fit_stump(set, y, w, presort(set));
    CHECK(fit.stump == Stump{0, 2.5, 1});
    CHECK(fit.weighted_error == 0.0);
    CHECK(fit_stump_oracle(set, y, w).stump == fit.stump);
  }
  SUBCASE("single class gives the constant stump") {
    std::mt19937_64 rng(2);
    const auto set = random_grid_set(rng, 7, 3);
    const std::vector<int> y(7, 1);
    const auto fit = fit_stump(set, y, uniform_weights(7), presort(set));
    CHECK(fit.stump == Stump{0, kSentinelThreshold, 1});
    CHECK(fit.weighted_error == 0.0);
  }
  SUBCASE("second feature wins when only it separates") {
    const auto set = from_rows({{1, 5}, {2, 1}, {3, 7}, {4, 2}}, {1, 0, 1, 0});
    const std::vector<int> y{1, -1, 1, -1};
    const auto fit = fit_stump(set, y, uniform_weights(4), presort(set));
    CHECK(fit.stump == Stump{1, 3.5, 1});
    CHECK(fit.weighted_error == 0.0);
  }
  SUBCASE("tie between sentinel and a midpoint goes to the smaller threshold") {
    // Both (sentinel, -1) and (2.5, +1) misclassify exactly one sample.
    const auto set = from_rows({{1}, {2}, {3}, {4}}, {0, 0, 1, 0});
    const std::vector<int> y{-1, -1, 1, -1};
    const auto fit = fit_stump(set, y, uniform_weights(4), presort(set));
    CHECK(fit.stump == Stump{0, kSentinelThreshold, -1});
    CHECK(fit.weighted_error == doctest::Approx(0.25).epsilon(1e-15));
  }
  SUBCASE("constant feature with mixed labels: error is the smaller class mass") {
    const auto set = from_rows({{2}, {2}, {2}, {2}}, {0, 0, 1, 0});
    const std::vector<int> y{1, -1, 1, -1};
    const std::vector<double> w{0.1, 0.2, 0.3, 0.4};
    const auto oracle = fit_stump_oracle(set, y, w);
    CHECK(oracle.stump.is_constant());
    CHECK(oracle.weighted_error == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(oracle.stump.polarity == -1);
    CHECK(fit_stump(set, y, w, presort(set)).stump == oracle.stump);
  }
}

TEST_CASE("fit_stump input validation") {
  const auto set = from_rows({{1}, {2}}, {0, 1});
  const auto sorted = presort(set);
  const std::vector<int> y{1, -1};
  CHECK_THROWS_AS(fit_stump(set, std::vector<int>{1}, uniform_weights(2), sorted), Error);
  CHECK_THROWS_AS(fit_stump(set, y, std::vector<double>{0.5, 0.6}, sorted), Error);
  CHECK_THROWS_AS(fit_stump(set, std::vector<int>{1, 0}, uniform_weights(2), sorted), Error);
  CHECK_THROWS_AS(fit_stump(set, y, std::vector<double>{1.5, -0.5}, sorted), Error);
  CHECK_THROWS_AS(fit_stump_oracle(set, std::vector<int>{2, 1}, uniform_weights(2)), Error);
}

TEST_CASE("property: fit_stump matches the brute-force oracle") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 50;
    const std::size_t d = 1 + rng() % 20;
    const auto set = trial % 2 ? random_grid_set(rng, n, d) : random_real_set(rng, n, d);
    const auto y = random_targets(rng, n);
    const auto w = random_weights(rng, n);
    const auto fast = fit_stump(set, y, w, presort(set));
    const auto oracle = fit_stump_oracle(set, y, w);
    CAPTURE(trial);
    CHECK(fast.stump.feature == oracle.stump.feature);
    CHECK(fast.stump.polarity == oracle.stump.polarity);
    CHECK(std::abs(fast.weighted_error - oracle.weighted_error) <= 1e-12);
    CHECK(upper_side(set, fast.stump) == upper_side(set, oracle.stump));
    CHECK(fast.weighted_error <= 0.5 + 1e-12);
  }
}

TEST_CASE("parallel and serial scans are bit identical") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const auto set = random_real_set(rng, 300, 64);
    const auto y = random_targets(rng, 300);
    const auto w = random_weights(rng, 300);
    const auto sorted = presort(set);
    const auto a = fit_stump(set, y, w, sorted);
    const auto b = fit_stump_serial(set, y, w, sorted);
    CHECK(a.stump == b.stump);
    CHECK(a.weighted_error == b.weighted_error);
  }
}

TEST_CASE("monotone column transforms keep the partition") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng() % 40;
    const auto set = random_grid_set(rng, n, 4);
    const auto y = random_targets(rng, n);
    const auto w = random_weights(rng, n);
    auto moved = map_column(set, 0, [](float x) { return x * 4.0f + 100.0f; });
    moved = map_column(moved, 1, [](float x) { return x * x * x; });
    moved = map_column(moved, 3, [](float x) { return std::ldexp(x, -5) - 3.0f; });
    const auto a = fit_stump(set, y, w, presort(set));
    const auto b = fit_stump(moved, y, w, presort(moved));
    CHECK(a.stump.feature == b.stump.feature);
    CHECK(a.stump.polarity == b.stump.polarity);
    CHECK(a.weighted_error == b.weighted_error);
    CHECK(upper_side(set, a.stump) == upper_side(moved, b.stump));
  }
}

TEST_CASE("scan work is linear in n per feature") {
  std::mt19937_64 rng(4);
  for (std::size_t n : {10u, 100u, 1000u}) {
    const auto set = random_real_set(rng, n, 12);
    const auto y = random_targets(rng, n);
    const auto w = random_weights(rng, n);
    const auto sorted = presort(set);
    ScanCounters parallel;
    ScanCounters serial;
    fit_stump(set, y, w, sorted, &parallel);
    fit_stump_serial(set, y, w, sorted, &serial);
    CHECK(parallel.samples_visited == n * 12);
    CHECK(serial.samples_visited == n * 12);
    CHECK(parallel.features_scanned == 12);
  }
}

TEST_CASE("zero-weight samples still generate thresholds") {
  // Sample 1 carries no weight but splits samples 0 and 2 apart.
  const auto set = from_rows({{1}, {2}, {3}}, {0, 0, 1});
  const std::vector<int> y{-1, 1, 1};
  const std::vector<double> w{0.5, 0.0, 0.5};
  const auto fit = fit_stump(set, y, w, presort(set));
  CHECK(fit.weighted_error == 0.0);
  CHECK(fit.stump == Stump{0, 1.5, 1});
}
