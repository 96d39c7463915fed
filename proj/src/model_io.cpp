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

#include "stumpboost/model_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>

#include "stumpboost/common.hpp"

namespace stumpboost {

namespace {

constexpr std::string_view kHeader = "STUMPBOOST-MODEL v1";

std::string real(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

class LineReader {
 public:
  explicit LineReader(std::string_view text) : in_(std::string(text)) {}

  bool next() {
    while (std::getline(in_, line_)) {
      ++number_;
      if (!line_.empty() && line_.back() == '\r') line_.pop_back();
      if (!line_.empty()) {
        fields_.clear();
        std::istringstream split(line_);
        std::string f;
        while (split >> f) fields_.push_back(f);
        return true;
      }
    }
    return false;
  }

  const std::vector<std::string>& fields() const { return fields_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error("model line " + std::to_string(number_) + ": " + what);
  }

  void expect_key(std::size_t index, std::string_view key) const {
    if (index >= fields_.size() || fields_[index] != key) fail("expected '" + std::string(key) + "'");
  }

  template <typename T>
  T number(std::size_t index) const {
    if (index >= fields_.size()) fail("missing value");
    const std::string& s = fields_[index];
    T v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) fail("bad number '" + s + "'");
    return v;
  }

 private:
  std::istringstream in_;
  std::string line_;
  std::vector<std::string> fields_;
  std::size_t number_ = 0;
};

}  // namespace

std::string serialize_model(const MultiClassModel& model) {
  std::string out(kHeader);
  out += "\nrounds " + std::to_string(model.round_budget) + "\ndims " + std::to_string(model.dims) +
         "\nclasses";
  for (auto c : model.classes) out += ' ' + std::to_string(c);
  out += '\n';
  for (std::size_t k = 0; k < model.classes.size(); ++k) {
    const auto& m = model.models[k];
    for (std::size_t t = 0; t < m.rounds.size(); ++t) {
      const auto& r = m.rounds[t];
      const RoundTrace trace = t < m.trace.size() ? m.trace[t] : RoundTrace{};
      out += "class " + std::to_string(model.classes[k]) + " round " + std::to_string(t) + " feature " +
             std::to_string(r.stump.feature) + " threshold " + real(r.stump.threshold) + " polarity " +
             (r.stump.polarity > 0 ? "1" : "-1") + " alpha " + real(r.alpha) + " error " +
             real(trace.error) + " bound " + real(trace.loss_bound) + '\n';
    }
  }
  return out;
}

MultiClassModel parse_model(std::string_view text) {
  LineReader in(text);
  if (!in.next() || in.fields().size() != 2 || in.fields()[0] + " " + in.fields()[1] != kHeader) {
    throw Error("model: missing '" + std::string(kHeader) + "' header");
  }
  MultiClassModel model;
  if (!in.next()) in.fail("missing 'rounds'");
  in.expect_key(0, "rounds");
  model.round_budget = in.number<std::size_t>(1);
  if (!in.next()) in.fail("missing 'dims'");
  in.expect_key(0, "dims");
  model.dims = in.number<std::size_t>(1);
  if (!in.next()) in.fail("missing 'classes'");
  in.expect_key(0, "classes");
  for (std::size_t k = 1; k < in.fields().size(); ++k) {
    const auto c = in.number<std::int32_t>(k);
    if (c < 0 || (!model.classes.empty() && c <= model.classes.back())) {
      in.fail("class ids must be non-negative and ascending");
    }
    model.classes.push_back(c);
  }
  model.models.resize(model.classes.size());

  while (in.next()) {
    if (in.fields().size() != 16) in.fail("expected 16 fields in a round line");
    static constexpr std::string_view keys[] = {"class",    "round", "feature", "threshold", "polarity",
                                                "alpha",    "error", "bound"};
    for (std::size_t k = 0; k < 8; ++k) in.expect_key(2 * k, keys[k]);
    const auto c = in.number<std::int32_t>(1);
    auto it = std::find(model.classes.begin(), model.classes.end(), c);
    if (it == model.classes.end()) in.fail("class " + std::to_string(c) + " not in class list");
    auto& m = model.models[static_cast<std::size_t>(it - model.classes.begin())];
    if (in.number<std::size_t>(3) != m.rounds.size()) in.fail("rounds out of order");

    WeightedStump ws;
    ws.stump.feature = in.number<std::size_t>(5);
    ws.stump.threshold = in.number<double>(7);
    ws.stump.polarity = in.number<int>(9);
    ws.alpha = in.number<double>(11);
    if (ws.stump.polarity != 1 && ws.stump.polarity != -1) in.fail("polarity must be 1 or -1");
    if (!(ws.alpha >= 0.0) || !std::isfinite(ws.alpha)) in.fail("alpha must be finite and non-negative");
    if (ws.stump.feature >= model.dims) in.fail("feature index exceeds dims");
    m.rounds.push_back(ws);
    m.trace.push_back({in.number<double>(13), ws.alpha, in.number<double>(15)});
  }
  return model;
}

void save_model(const MultiClassModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out << serialize_model(model);
  if (!out) throw Error("write failed for '" + path.string() + "'");
}

MultiClassModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  return parse_model(std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()));
}

}  // namespace stumpboost
