// Copyright 2026 The strclean Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#ifdef STRCLEAN_CLI11_PACKAGE
#include <CLI/CLI.hpp>
#else
#include "CLI11.hpp"
#endif
#include "strclean/corpus.hpp"
#include "strclean/error.hpp"
#include "strclean/pipeline.hpp"

namespace fs = std::filesystem;
using namespace strclean;

namespace {

constexpr int kInputError = 1;
constexpr int kConfigError = 2;

struct Options {
  std::string input;
  std::string out;
  std::string report;
  std::string config;
  std::string model;
  std::string data_dir;
  bool no_encode = false;
  bool loocv = false;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> threads;
};

PipelineConfig load_config(const Options& o) {
  PipelineConfig config = o.config.empty() ? PipelineConfig{} : PipelineConfig::load(o.config);
  if (!o.data_dir.empty()) config.paths.data_dir = o.data_dir;
  if (o.no_encode) config.encode = false;
  if (o.seed) config.seed = *o.seed;
  if (o.threads) config.threads = *o.threads;
  return config;
}

void write_json(const nlohmann::json& doc, const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  out << doc.dump(2) << '\n';
  if (!out) throw IoError("cannot write " + path.string());
}

Table read_input(const Options& o, const PipelineConfig& config) {
  if (!fs::exists(o.input)) throw IoError("input file not found: " + o.input);
  ReadOptions ro;
  ro.delimiter = config.delimiter;
  ro.missing_tokens = config.missing_tokens;
  return read_delimited(fs::path(o.input), ro);
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
}

int run_clean(const Options& o) {
  const PipelineConfig config = load_config(o);
  const Resources resources = Resources::load(config);
  print_warnings(resources.warnings);
  const Table input = read_input(o, config);
  const PipelineResult result = run_pipeline(input, config, resources);
  if (result.matrix) {
    write_matrix(*result.matrix, fs::path(o.out));
  } else {
    write_delimited(result.processed, fs::path(o.out), config.delimiter);
  }
  write_json(result.report.to_json(), o.report);
  return 0;
}

int run_infer(const Options& o) {
  const PipelineConfig config = load_config(o);
  const Resources resources = Resources::load(config);
  print_warnings(resources.warnings);
  const Table input = read_input(o, config);
  const RunReport report = infer_table(input, config, resources);
  write_json(report.to_json(), o.report);
  for (const auto& col : report.columns)
    std::cout << col.name << '\t' << kind_name(col.profile.winner) << '\n';
  return 0;
}

int run_train(const Options& o) {
  const PipelineConfig config = load_config(o);
  const Resources resources = Resources::load(config);
  print_warnings(resources.warnings);
  if (!fs::exists(o.input)) throw IoError("corpus not found: " + o.input);
  const LabeledCorpus corpus = LabeledCorpus::load(o.input);
  const auto dataset = corpus_features(corpus, resources.embeddings, resources.keywords);
  if (o.loocv) {
    const LoocvResult cv = loocv(dataset);
    std::printf("loocv accuracy %.4f  f1 %.4f  confusion [[%zu %zu] [%zu %zu]]\n", cv.accuracy, cv.f1,
                cv.confusion[0][0], cv.confusion[0][1], cv.confusion[1][0], cv.confusion[1][1]);
  }
  const GbcModel model = train_gbc(dataset);
  save_model(model, o.model);
  std::printf("trained on %zu columns, %zu trees, final log-loss %.6f\n", dataset.size(), model.trees().size(),
              model.training_loss().empty() ? 0.0 : model.training_loss().back());
  return 0;
}

int run_eval(const Options& o) {
  const PipelineConfig config = load_config(o);
  const Resources resources = Resources::load(config);
  if (!resources.lexicon) throw IoError("sentiment lexicon unavailable");
  if (!fs::exists(o.input)) throw IoError("suite not found: " + o.input);
  const OrderingEvaluation eval = evaluate_ordering(LikertSuite::load(o.input), *resources.lexicon);
  std::printf("%-20s %10s %10s\n", "scale", "lexicon", "baseline");
  for (const auto& s : eval.scales) std::printf("%-20s %10.4f %10.4f\n", s.name.c_str(), s.lexicon, s.baseline);
  std::printf("%-20s %10.4f %10.4f\n", "mean", eval.mean_lexicon, eval.mean_baseline);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Automated cleaning and encoding of string columns in tabular data"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--config", o.config, "JSON pipeline configuration");
    sub->add_option("--data-dir", o.data_dir, "Directory with the bundled data files");
  };

  auto* clean = app.add_subcommand("clean", "Infer, clean, process and encode a delimited file");
  clean->add_option("input", o.input, "Input CSV")->required();
  clean->add_option("--out", o.out, "Output CSV (matrix, or processed table with --no-encode)")->required();
  clean->add_option("--report", o.report, "Run report JSON")->required();
  clean->add_flag("--no-encode", o.no_encode, "Emit the processed table instead of the numeric matrix");
  clean->add_option("--seed", o.seed, "Seed for every randomized step");
  clean->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  add_common(clean);

  auto* infer = app.add_subcommand("infer", "Report the inferred type of every column");
  infer->add_option("input", o.input, "Input CSV")->required();
  infer->add_option("--report", o.report, "Profile report JSON")->required();
  add_common(infer);

  auto* train = app.add_subcommand("train-stattype", "Train the ordinal/nominal classifier");
  train->add_option("corpus", o.input, "Labeled corpus JSON")->required();
  train->add_option("--model", o.model, "Output model JSON")->required();
  train->add_flag("--loocv", o.loocv, "Also print leave-one-out accuracy");
  add_common(train);

  auto* eval = app.add_subcommand("eval-ordering", "Spearman correlation of ordinal encoders on a Likert suite");
  eval->add_option("suite", o.input, "Likert suite JSON")->required();
  add_common(eval);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  try {
    if (*clean) return run_clean(o);
    if (*infer) return run_infer(o);
    if (*train) return run_train(o);
    return run_eval(o);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
