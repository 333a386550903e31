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
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "strclean/table.hpp"

namespace strclean {

enum class EncoderId { Passthrough, Similarity, GammaPoisson, MinHash, Ordinal, BaselineOrdinal, Target };

std::string_view encoder_name(EncoderId id);
/// Throws ConfigError for an unknown name.
EncoderId parse_encoder(std::string_view name);

struct OutputColumnMeta {
  std::string name;
  std::string source;
  EncoderId encoder = EncoderId::Passthrough;
  std::size_t component = 0;
};

/// Column-major dense output.
struct EncodedMatrix {
  std::size_t n_rows = 0;
  std::vector<std::vector<double>> columns;
  std::vector<OutputColumnMeta> meta;

  std::size_t n_cols() const { return columns.size(); }
  double at(std::size_t row, std::size_t col) const { return columns[col][row]; }
  /// Throws DimensionMismatch on a row-count mismatch.
  void append(EncodedMatrix other);
  bool has_nan() const;
};

/// < 30 Similarity, < 100 GammaPoisson, otherwise MinHash.
EncoderId select_nominal_encoder(std::size_t cardinality);

/// Sorted distinct 3-grams of " s " (ASCII-lowercased). "" gives {" "}.
std::vector<std::string> ngram_set(std::string_view s, std::size_t n = 3);

/// Jaccard index of two sorted distinct sets; 1 for two empty sets.
double jaccard(const std::vector<std::string>& a, const std::vector<std::string>& b);

/// Text a cell is encoded from; Missing becomes "".
std::string encoding_text(const Cell& cell);

/// Unique values in first-appearance order.
std::vector<std::string> unique_values(const Column& column);

EncodedMatrix similarity_encode(const Column& column, const std::vector<std::string>& categories);
EncodedMatrix similarity_encode(const Column& column);

/// Component j is min over grams of h_j(gram) / 2^64.
std::vector<double> minhash_signature(std::string_view value, std::size_t k, std::uint64_t seed);
EncodedMatrix minhash_encode(const Column& column, std::size_t k = 64, std::uint64_t seed = 0);

struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  /// Row-major.
  std::vector<double> data;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}
  double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

struct GammaPoissonFit {
  /// Topics x vocabulary, rows summing to 1.
  DenseMatrix loadings;
  /// Samples x topics.
  DenseMatrix activations;
  /// Generalized KL divergence before the first and after every update.
  std::vector<double> objective;
};

/// Generalized KL divergence sum(v log(v/r) - v + r).
double kl_divergence(const DenseMatrix& v, const DenseMatrix& reconstruction);
DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);

/// Multiplicative-update KL-NMF of counts ~ activations * loadings.
/// Throws DegenerateInput for an all-zero or negative matrix.
GammaPoissonFit gamma_poisson_fit(const DenseMatrix& counts, std::size_t d = 10, std::size_t iterations = 100,
                                  std::uint64_t seed = 0);
EncodedMatrix gamma_poisson_encode(const Column& column, std::size_t d = 10, std::size_t iterations = 100,
                                   std::uint64_t seed = 0);

class SentimentLexicon {
 public:
  /// Lines "token<TAB>score"; "[boosters]" switches to "token<TAB>factor"
  /// and "[negators]" to bare tokens. '#' starts a comment line.
  /// Throws SchemaError on malformed content, IoError if unreadable.
  static SentimentLexicon parse(std::istream& in);
  static SentimentLexicon load(const std::filesystem::path& path);

  void set_score(std::string token, double score);
  void set_booster(std::string token, double factor);
  void add_negator(std::string token);

  const double* score(std::string_view token) const;
  const double* booster(std::string_view token) const;
  bool is_negator(std::string_view token) const;
  std::size_t size() const { return scores_.size(); }

 private:
  std::unordered_map<std::string, double> scores_;
  std::unordered_map<std::string, double> boosters_;
  std::unordered_set<std::string> negators_;
};

double sentiment_intensity(std::string_view s, const SentimentLexicon& lexicon);

/// Unique values ascending by intensity, ties in first-appearance order.
std::vector<std::string> ordinal_order(const Column& column, const SentimentLexicon& lexicon);
EncodedMatrix ordinal_encode(const Column& column, const SentimentLexicon& lexicon);

/// Unique values in byte-wise lexicographic order.
std::vector<std::string> baseline_order(const Column& column);
EncodedMatrix baseline_ordinal_encode(const Column& column);

/// 1 - 6 sum(d^2) / (u (u^2 - 1)) over average ranks. Throws DimensionMismatch.
double spearman_rank_correlation(std::span<const double> a, std::span<const double> b);
/// Both arguments list the same items best-last. Throws MismatchedItems.
double spearman_rank_correlation(const std::vector<std::string>& order_a, const std::vector<std::string>& order_b);

/// Smoothed mean target per value: (n_v mean_v + m mean) / (n_v + m).
EncodedMatrix target_encode(const Column& column, std::span<const double> target, double smoothing = 10.0);

}  // namespace strclean
