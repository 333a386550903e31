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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "strclean/cleaning.hpp"
#include "strclean/encoders.hpp"
#include "strclean/geo.hpp"
#include "strclean/ordinality.hpp"
#include "strclean/pfsm.hpp"
#include "strclean/processing.hpp"
#include "strclean/table.hpp"

namespace strclean {

/// Directory holding the bundled data files: $STRCLEAN_DATA_DIR, else the
/// source tree's data/ when present, else the installed share directory.
std::filesystem::path default_data_dir();

struct DataPaths {
  std::filesystem::path data_dir;
  std::filesystem::path embeddings;
  std::filesystem::path geo_table;
  std::filesystem::path lexicon;
  std::filesystem::path nouns;
  std::filesystem::path stopwords;
  std::filesystem::path keywords_dir;
  std::filesystem::path model;
  /// Optional JSON registry whose machines replace the built-in ones.
  std::filesystem::path machines;

  /// Fills empty entries with the conventional locations under data_dir.
  void resolve();
  nlohmann::json to_json() const;
};

struct PipelineConfig {
  char delimiter = ',';
  std::vector<std::string> missing_tokens = default_missing_tokens();
  MachineToggles machines;
  InferenceOptions inference;
  double alpha = 0.05;
  TypoOptions typos;
  ImputeOptions impute;
  std::map<std::string, EncoderId> encoder_overrides;
  std::size_t gamma_poisson_dim = 10;
  std::size_t gamma_poisson_iterations = 100;
  std::size_t minhash_k = 64;
  std::uint64_t seed = 0;
  bool encode = true;
  /// Worker threads for per-column stages; 0 picks the hardware count.
  std::size_t threads = 0;
  /// Numeric column used by columns forced to the Target encoder.
  std::string target_column;
  double target_smoothing = 10.0;
  DataPaths paths;

  /// Unknown keys and ill-typed values throw ConfigError.
  static PipelineConfig from_json(const nlohmann::json& doc);
  static PipelineConfig load(const std::filesystem::path& path);
  nlohmann::json to_json() const;
};

/// Everything the pipeline reads from disk. Missing optional files
/// degrade the dependent stage and leave a warning.
struct Resources {
  Registry registry = build_registry();
  std::optional<GeoTable> geo;
  NounFilter nouns;
  std::optional<SentimentLexicon> lexicon;
  EmbeddingStore embeddings;
  KeywordConfig keywords = KeywordConfig::builtin();
  std::optional<GbcModel> model;
  std::vector<std::string> warnings;

  static Resources load(const PipelineConfig& config);
};

struct OutputSummary {
  std::string name;
  Directive directive = Directive::NominalEncode;
  std::optional<EncoderId> encoder;
};

struct ColumnReport {
  std::string name;
  ColumnProfile profile;
  std::optional<ColumnProfile> reinferred;
  StringFeatureKind final_kind = StringFeatureKind::Standard;
  /// "ok", "dropped" or "downgraded".
  std::string status = "ok";
  std::optional<OrdinalityFeatures> features;
  std::optional<StatTypePrediction> stat_type;
  std::vector<OutputSummary> outputs;
  std::vector<std::string> warnings;

  nlohmann::json to_json() const;
};

struct RunReport {
  static constexpr int kVersion = 1;

  std::size_t n_rows = 0;
  std::uint64_t seed = 0;
  MissingnessDiagnosis missingness;
  std::vector<ColumnReport> columns;
  RepairLog repairs;
  std::vector<std::pair<std::string, double>> timings_ms;
  std::vector<std::string> warnings;

  std::size_t string_columns() const;
  nlohmann::json to_json() const;
};

struct PipelineResult {
  /// Processed table; always filled.
  Table processed;
  /// Filled when encoding ran.
  std::optional<EncodedMatrix> matrix;
  RunReport report;
};

PipelineResult run_pipeline(const Table& input, const PipelineConfig& config, const Resources& resources);
PipelineResult run_pipeline(const Table& input, const PipelineConfig& config);

/// Profiles only, as reported by the `infer` subcommand.
RunReport infer_table(const Table& input, const PipelineConfig& config, const Resources& resources);

/// Header of output names, then one row per record.
void write_matrix(const EncodedMatrix& matrix, std::ostream& out);
void write_matrix(const EncodedMatrix& matrix, const std::filesystem::path& path);

/// Runs fn(0..count-1) on up to `threads` workers (0 = hardware count).
/// fn must not throw; results are written by index so order never varies.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& fn);

}  // namespace strclean
