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
#include <cstdio>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "stumpboost/common.hpp"
#include "stumpboost/harness.hpp"
#include "stumpboost/model_io.hpp"
#include "stumpboost/selection.hpp"
#include "stumpboost/synth.hpp"

namespace stumpboost {

namespace {

// Settings from --config only fill in flags absent from the command line, so
// precedence is: flag > config file > built-in default.
void merge_config(std::vector<std::string>& args, const CLI::App& app) {
  if (args.empty()) return;
  const CLI::App* sub = app.get_subcommand_no_throw(args.front());
  if (sub == nullptr) return;
  std::filesystem::path config_path;
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (args[k] == "--config" && k + 1 < args.size()) config_path = args[k + 1];
    if (args[k].rfind("--config=", 0) == 0) config_path = args[k].substr(9);
  }
  if (config_path.empty()) return;
  const auto config = read_config_file(config_path);
  std::vector<std::string> extra;
  for (const auto& [key, value] : config) {
    const std::string flag = "--" + key;
    if (key == "config" || sub->get_option_no_throw(flag) == nullptr) continue;
    const bool given = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
    if (!given) extra.push_back(flag + "=" + value);
  }
  args.insert(args.end(), extra.begin(), extra.end());
}

std::vector<std::string> summary_files(const std::string& prefix, const SynthConfig& config) {
  std::vector<std::string> files{prefix + ".train.fvb", prefix + ".test.fvb", prefix + ".truth.txt"};
  for (const auto& b : config.blocks) {
    files.push_back(prefix + "." + b.name + ".train.fvb");
    files.push_back(prefix + "." + b.name + ".test.fvb");
  }
  return files;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw Error("write failed for '" + path.string() + "'");
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"AdaBoost with decision stumps over layer-block feature files", "stumpboost"};
  app.require_subcommand(1);

  TrainConfig train_config;
  int threads = 0;
  std::string config_file;
  std::vector<std::int32_t> drop;
  auto add_training = [&](CLI::App* sub) {
    sub->add_option("--rounds", train_config.rounds, "Boosting rounds per class")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sub->add_option("--epsilon-clamp", train_config.epsilon_clamp, "Lower clamp on weighted error")
        ->capture_default_str();
    sub->add_option("--early-stop-margin", train_config.early_stop_margin,
                    "Stop when error >= 0.5 - margin")
        ->capture_default_str();
    sub->add_option("--drop-class", drop, "Class id to exclude (repeatable)");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--threads", threads, "OpenMP thread count (0 = runtime default)");
    sub->add_option("--config", config_file, "key=value file; flags override it");
  };

  // train
  std::string data_path;
  std::string model_path;
  auto* train = app.add_subcommand("train", "Train a one-vs-rest model");
  train->add_option("--data", data_path, "Training features (FVB1 or .csv)")->required();
  train->add_option("--model", model_path, "Output model file")->required();
  add_training(train);
  add_common(train);

  // predict
  std::string out_path;
  auto* predict = app.add_subcommand("predict", "Write one predicted class id per row");
  predict->add_option("--model", model_path, "Model file")->required();
  predict->add_option("--data", data_path, "Features to classify")->required();
  predict->add_option("--out", out_path, "Output file (default stdout)");
  add_common(predict);

  // eval
  auto* eval = app.add_subcommand("eval", "Print top-1 accuracy of a model on a labeled set");
  eval->add_option("--model", model_path, "Model file")->required();
  eval->add_option("--data", data_path, "Labeled features")->required();
  add_common(eval);

  // compare
  std::string blocks_arg;
  std::string test_blocks_arg;
  std::size_t train_count = 0;
  std::size_t test_count = 0;
  std::uint64_t seed = 0;
  std::string table_format = "text";
  auto* compare = app.add_subcommand("compare", "Single blocks vs. their concatenation");
  compare->add_option("--blocks", blocks_arg, "name=path,... feature files, one per block")->required();
  compare->add_option("--test-blocks", test_blocks_arg, "name=path,... pre-split test files");
  auto* train_count_opt = compare->add_option("--train-count", train_count, "Training samples per class");
  auto* test_count_opt = compare->add_option("--test-count", test_count, "Test samples per class (default: rest)");
  compare->add_option("--seed", seed, "Split seed")->capture_default_str();
  compare->add_option("--format", table_format, "Output format")->check(CLI::IsMember({"text", "csv"}));
  compare->add_option("--out", out_path, "Also write the table here");
  add_training(compare);
  add_common(compare);

  // synth
  SynthConfig synth_config;
  std::size_t synth_blocks = 3;
  std::size_t informative = 4;
  std::size_t redundant = 1;
  std::size_t noise = 20;
  double disjointness = 1.0;
  std::string prefix;
  auto* synth = app.add_subcommand("synth", "Write a synthetic multi-block dataset");
  synth->add_option("--out", prefix, "Output path prefix")->required();
  synth->add_option("--classes", synth_config.classes)->capture_default_str();
  synth->add_option("--train-per-class", synth_config.train_per_class)->capture_default_str();
  synth->add_option("--test-per-class", synth_config.test_per_class)->capture_default_str();
  synth->add_option("--blocks", synth_blocks, "Number of blocks")->capture_default_str();
  synth->add_option("--informative", informative, "Informative columns per block")->capture_default_str();
  synth->add_option("--redundant", redundant, "Monotone copies per informative column")->capture_default_str();
  synth->add_option("--noise", noise, "Noise columns per block")->capture_default_str();
  synth->add_option("--gap", synth_config.signal_gap, "Distance between class means")->capture_default_str();
  synth->add_option("--noise-scale", synth_config.noise_scale)->capture_default_str();
  synth->add_option("--disjointness", disjointness, "0 = every block covers every class, 1 = partition")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  synth->add_option("--seed", synth_config.seed)->capture_default_str();
  add_common(synth);

  // report
  std::string manifest_path;
  std::string report_format = "text";
  bool per_class = false;
  auto* report = app.add_subcommand("report", "Per-block feature selection report");
  report->add_option("--model", model_path, "Model file")->required();
  auto* manifest_opt = report->add_option("--manifest", manifest_path, "Manifest sidecar file");
  auto* report_data_opt = report->add_option("--data", data_path, "Feature file whose manifest to use");
  manifest_opt->excludes(report_data_opt);
  report->add_option("--format", report_format)->check(CLI::IsMember({"text", "machine"}));
  report->add_flag("--per-class", per_class, "One report per class");
  add_common(report);

  try {
    merge_config(args, app);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    set_thread_count(threads);
    if (train->parsed()) {
      train_config.validate();
      auto set = load_features(data_path);
      if (!drop.empty()) set = drop_classes(set, drop);
      const auto model = train_ovr(set, train_config);
      save_model(model, model_path);
      std::size_t rounds = 0;
      for (const auto& m : model.models) rounds += m.rounds.size();
      out << "trained " << model.classes.size() << " classes, " << rounds << " rounds, "
          << selected_features(model).size() << " distinct features\n";
    } else if (predict->parsed()) {
      const auto model = load_model(model_path);
      const auto set = load_features(data_path);
      std::string lines;
      for (std::size_t i = 0; i < set.samples(); ++i) {
        lines += std::to_string(predict_multiclass(model, set.row(i))) + '\n';
      }
      if (out_path.empty()) {
        out << lines;
      } else {
        write_text(out_path, lines);
      }
    } else if (eval->parsed()) {
      const auto model = load_model(model_path);
      char line[64];
      std::snprintf(line, sizeof line, "accuracy %.4f\n", evaluate(model, load_features(data_path)));
      out << line;
    } else if (compare->parsed()) {
      ExperimentSpec spec;
      spec.blocks = parse_block_list(blocks_arg);
      if (!test_blocks_arg.empty()) spec.test_blocks = parse_block_list(test_blocks_arg);
      if (train_count_opt->count() > 0) {
        spec.split = SplitParams{train_count, std::nullopt, seed};
        if (test_count_opt->count() > 0) spec.split->test_count = test_count;
      } else if (test_count_opt->count() > 0) {
        throw Error("--test-count requires --train-count");
      }
      spec.train = train_config;
      spec.drop_classes = drop;
      const auto table = run_comparison(spec);
      const std::string text = table_format == "csv" ? format_table_csv(table) : format_table_text(table);
      out << text;
      if (!out_path.empty()) write_text(out_path, text);
    } else if (synth->parsed()) {
      const auto base = make_synth_config(synth_config.classes, synth_blocks, informative, redundant, noise,
                                          disjointness);
      synth_config.blocks = base.blocks;
      const auto data = generate(synth_config);
      save_features(data.train, prefix + ".train.fvb");
      save_features(data.test, prefix + ".test.fvb");
      std::string truth;
      for (std::size_t b = 0; b < synth_config.blocks.size(); ++b) {
        const auto& name = synth_config.blocks[b].name;
        for (auto column : data.informative_columns[b]) truth += name + ' ' + std::to_string(column) + '\n';
        save_features(slice_block(data.train, name), prefix + "." + name + ".train.fvb");
        save_features(slice_block(data.test, name), prefix + "." + name + ".test.fvb");
      }
      write_text(prefix + ".truth.txt", truth);
      for (const auto& f : summary_files(prefix, synth_config)) out << "wrote " << f << '\n';
    } else if (report->parsed()) {
      const auto model = load_model(model_path);
      BlockManifest manifest;
      if (!manifest_path.empty()) {
        manifest = read_manifest_file(manifest_path);
      } else if (!data_path.empty()) {
        manifest = load_features(data_path).manifest();
      } else {
        manifest = BlockManifest::single("default", model.dims);
      }
      if (manifest.total_width() != model.dims) {
        throw Error("manifest covers " + std::to_string(manifest.total_width()) + " columns, model has " +
                    std::to_string(model.dims));
      }
      auto emit = [&](const SelectionReport& r) {
        out << (report_format == "machine" ? format_report_machine(r) : format_report_table(r));
      };
      if (per_class) {
        for (const auto& [label, r] : per_class_reports(model, manifest)) {
          out << (report_format == "machine" ? "class=" : "class ") << label << '\n';
          emit(r);
        }
      } else {
        emit(per_block_report(model, manifest));
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace stumpboost
