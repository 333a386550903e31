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
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "strclean/table.hpp"

namespace strclean {

/// Word vectors with a deterministic fallback for unknown tokens.
class EmbeddingStore {
 public:
  explicit EmbeddingStore(std::size_t dimension = 50, std::uint64_t fallback_seed = 0);

  /// Whitespace-separated token followed by D floats per line; the first
  /// occurrence of a token wins. Throws IoError or DimensionMismatch.
  static EmbeddingStore load(const std::filesystem::path& path, std::uint64_t fallback_seed = 0);
  static EmbeddingStore parse(std::istream& in, std::uint64_t fallback_seed = 0);

  /// Returns false if the token was already present. Throws DimensionMismatch.
  bool add(std::string token, std::vector<double> vector);

  /// Stored vector, or a point uniform in [-1,1]^D fixed by (token, seed).
  std::vector<double> vector(std::string_view token) const;

  bool contains(std::string_view token) const;
  std::size_t size() const { return vectors_.size(); }
  std::size_t dimension() const { return dimension_; }
  std::uint64_t fallback_seed() const { return fallback_seed_; }

 private:
  std::size_t dimension_;
  std::uint64_t fallback_seed_;
  std::unordered_map<std::string, std::vector<double>> vectors_;
};

/// Mean over dimensions of the population variance of the entry points,
/// each entry embedded as the mean of its word vectors.
double embedding_dispersion(const std::vector<std::string>& unique_values, const EmbeddingStore& store);

struct KeywordConfig {
  std::vector<std::string> ordinal_names;
  std::vector<std::string> nominal_names;
  std::vector<std::string> likert_values;
  std::size_t min_substring = 4;
  double substring_coverage = 0.6;

  /// Reads ordinal_names.txt, nominal_names.txt and likert_values.txt. Throws IoError.
  static KeywordConfig load(const std::filesystem::path& dir);
  /// Small built-in lists for running without data files.
  static KeywordConfig builtin();
};

inline constexpr std::size_t kOrdinalityFeatureCount = 8;
using FeatureVector = std::array<double, kOrdinalityFeatureCount>;

struct OrdinalityFeatures {
  std::size_t n_rows = 0;
  std::size_t n_unique = 0;
  double unique_ratio = 0.0;
  double embedding_dispersion = 0.0;
  bool name_is_ordinal = false;
  bool name_is_nominal = false;
  bool values_have_ordinal_keywords = false;
  bool values_share_substring = false;

  FeatureVector to_vector() const;
  nlohmann::json to_json() const;
};

/// True if some substring of `min_length` bytes occurs in at least
/// `coverage` of the values (case-insensitive).
bool share_common_substring(const std::vector<std::string>& unique_values, std::size_t min_length, double coverage);

/// Lowercased `name` and a keyword contain one another; the shorter side
/// needs at least three characters.
bool name_matches(std::string_view name, const std::vector<std::string>& keywords);

OrdinalityFeatures extract_features(const Column& column, std::string_view name, const EmbeddingStore& store,
                                    const KeywordConfig& keywords);

enum class StatType { Nominal, Ordinal };

std::string_view stat_type_name(StatType t);

struct GbcHyperparams {
  int n_trees = 100;
  int max_depth = 3;
  double learning_rate = 0.1;
  std::size_t min_samples_leaf = 1;
};

struct TreeNode {
  /// -1 marks a leaf.
  int feature = -1;
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  double value = 0.0;
};

struct RegressionTree {
  std::vector<TreeNode> nodes;
  /// x[feature] <= threshold goes left.
  double predict(const FeatureVector& x) const;
};

class GbcModel {
 public:
  GbcModel() = default;
  GbcModel(double base_score, double learning_rate, std::vector<RegressionTree> trees);

  double base_score() const { return base_score_; }
  double learning_rate() const { return learning_rate_; }
  const std::vector<RegressionTree>& trees() const { return trees_; }
  /// Mean log-loss after each round, index 0 being the base score alone.
  const std::vector<double>& training_loss() const { return training_loss_; }
  void set_training_loss(std::vector<double> loss) { training_loss_ = std::move(loss); }

  double raw_score(const FeatureVector& x) const;
  /// Probability of Ordinal.
  double predict_proba(const FeatureVector& x) const;

  nlohmann::json to_json() const;
  /// Throws SchemaError.
  static GbcModel from_json(const nlohmann::json& doc);

 private:
  double base_score_ = 0.0;
  double learning_rate_ = 0.1;
  std::vector<RegressionTree> trees_;
  std::vector<double> training_loss_;
};

/// Logistic-loss boosting. Labels are 1 for Ordinal. Throws DegenerateLabels
/// unless both classes are present.
GbcModel train_gbc(std::span<const FeatureVector> x, std::span<const int> labels, const GbcHyperparams& params = {});

struct LabeledFeatures {
  OrdinalityFeatures features;
  StatType label = StatType::Nominal;
};

GbcModel train_gbc(const std::vector<LabeledFeatures>& dataset, const GbcHyperparams& params = {});

struct StatTypePrediction {
  StatType label = StatType::Nominal;
  double probability = 0.0;
};

StatTypePrediction predict_stat_type(const GbcModel& model, const OrdinalityFeatures& features);

/// Throws IoError.
void save_model(const GbcModel& model, const std::filesystem::path& path);
/// Throws IoError or SchemaError.
GbcModel load_model(const std::filesystem::path& path);

}  // namespace strclean
