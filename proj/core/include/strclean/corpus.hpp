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

#include <array>
#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "strclean/encoders.hpp"
#include "strclean/ordinality.hpp"
#include "strclean/table.hpp"

namespace strclean {

/// One column with a ground-truth label (a kind name or "ordinal"/"nominal").
struct LabeledColumn {
  std::string name;
  std::string label;
  std::vector<std::string> values;

  /// Empty strings become Missing.
  Column to_column() const;
};

/// {"version": 1, "columns": [{"name", "label", "values"}]}
struct LabeledCorpus {
  static constexpr int kVersion = 1;
  std::vector<LabeledColumn> columns;

  /// Throws SchemaError.
  static LabeledCorpus from_json(const nlohmann::json& doc);
  /// Throws IoError or SchemaError.
  static LabeledCorpus load(const std::filesystem::path& path);
  nlohmann::json to_json() const;
  void save(const std::filesystem::path& path) const;
};

/// Features of every column labeled "ordinal" or "nominal". Throws SchemaError on any other label.
std::vector<LabeledFeatures> corpus_features(const LabeledCorpus& corpus, const EmbeddingStore& store,
                                             const KeywordConfig& keywords);

struct LoocvResult {
  /// confusion[truth][predicted], index 1 = ordinal.
  std::array<std::array<std::size_t, 2>, 2> confusion{};
  double accuracy = 0.0;
  /// F1 of the ordinal class.
  double f1 = 0.0;
  double off_diagonal() const;
};

LoocvResult loocv(const std::vector<LabeledFeatures>& dataset, const GbcHyperparams& params = {});

/// A response scale with its true order (lowest first) and a sample column.
struct LikertScale {
  std::string name;
  std::vector<std::string> order;
  std::vector<std::string> values;
};

/// {"version": 1, "scales": [{"name", "order", "values"}]}
struct LikertSuite {
  std::vector<LikertScale> scales;

  static LikertSuite from_json(const nlohmann::json& doc);
  static LikertSuite load(const std::filesystem::path& path);
  nlohmann::json to_json() const;
  void save(const std::filesystem::path& path) const;
};

struct ScaleScore {
  std::string name;
  double lexicon = 0.0;
  double baseline = 0.0;
};

struct OrderingEvaluation {
  std::vector<ScaleScore> scales;
  double mean_lexicon = 0.0;
  double mean_baseline = 0.0;
};

/// Spearman correlation of both ordinal encoders against each scale's true order.
OrderingEvaluation evaluate_ordering(const LikertSuite& suite, const SentimentLexicon& lexicon);

}  // namespace strclean
