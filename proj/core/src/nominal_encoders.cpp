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

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <unordered_map>

#include "strclean/encoders.hpp"
#include "strclean/error.hpp"
#include "strclean/hashing.hpp"

namespace strclean {

namespace {

constexpr std::size_t kSimilarityLimit = 30;
constexpr std::size_t kGammaPoissonLimit = 100;

constexpr std::pair<EncoderId, std::string_view> kEncoderNames[] = {
    {EncoderId::Passthrough, "Passthrough"}, {EncoderId::Similarity, "Similarity"},
    {EncoderId::GammaPoisson, "GammaPoisson"}, {EncoderId::MinHash, "MinHash"},
    {EncoderId::Ordinal, "Ordinal"},         {EncoderId::BaselineOrdinal, "BaselineOrdinal"},
    {EncoderId::Target, "Target"},
};

char ascii_lower(char c) { return c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c; }

}  // namespace

std::string_view encoder_name(EncoderId id) {
  for (const auto& [e, name] : kEncoderNames)
    if (e == id) return name;
  return "Passthrough";
}

EncoderId parse_encoder(std::string_view name) {
  for (const auto& [e, n] : kEncoderNames)
    if (n == name) return e;
  throw ConfigError("unknown encoder '" + std::string(name) + "'");
}

void EncodedMatrix::append(EncodedMatrix other) {
  if (columns.empty() && meta.empty()) n_rows = other.n_rows;
  if (other.n_rows != n_rows) throw DimensionMismatch("encoded blocks differ in row count");
  for (auto& c : other.columns) columns.push_back(std::move(c));
  for (auto& m : other.meta) meta.push_back(std::move(m));
}

bool EncodedMatrix::has_nan() const {
  for (const auto& c : columns)
    for (double v : c)
      if (std::isnan(v)) return true;
  return false;
}

EncoderId select_nominal_encoder(std::size_t cardinality) {
  if (cardinality < kSimilarityLimit) return EncoderId::Similarity;
  if (cardinality < kGammaPoissonLimit) return EncoderId::GammaPoisson;
  return EncoderId::MinHash;
}

std::vector<std::string> ngram_set(std::string_view s, std::size_t n) {
  if (s.empty()) return {" "};
  std::string padded = " ";
  for (char c : s) padded.push_back(ascii_lower(c));
  padded.push_back(' ');
  if (padded.size() < n) return {padded};
  std::vector<std::string> grams;
  for (std::size_t i = 0; i + n <= padded.size(); ++i) grams.push_back(padded.substr(i, n));
  std::sort(grams.begin(), grams.end());
  grams.erase(std::unique(grams.begin(), grams.end()), grams.end());
  return grams;
}

double jaccard(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a.empty() && b.empty()) return 1.0;
  std::size_t common = 0, i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++common;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return static_cast<double>(common) / static_cast<double>(a.size() + b.size() - common);
}

std::string encoding_text(const Cell& cell) { return cell.is_missing() ? std::string() : cell.to_string(); }

std::vector<std::string> unique_values(const Column& column) {
  std::vector<std::string> out;
  std::unordered_map<std::string, bool> seen;
  for (const auto& cell : column.cells) {
    auto text = encoding_text(cell);
    if (seen.emplace(text, true).second) out.push_back(std::move(text));
  }
  return out;
}

EncodedMatrix similarity_encode(const Column& column, const std::vector<std::string>& categories) {
  EncodedMatrix out;
  out.n_rows = column.size();
  std::vector<std::vector<std::string>> category_grams;
  for (const auto& c : categories) category_grams.push_back(ngram_set(c));
  std::unordered_map<std::string, std::vector<double>> cache;
  out.columns.assign(categories.size(), std::vector<double>(column.size()));
  for (std::size_t i = 0; i < column.size(); ++i) {
    const std::string text = encoding_text(column.cells[i]);
    auto it = cache.find(text);
    if (it == cache.end()) {
      const auto grams = ngram_set(text);
      std::vector<double> row;
      for (const auto& cg : category_grams) row.push_back(jaccard(grams, cg));
      it = cache.emplace(text, std::move(row)).first;
    }
    for (std::size_t c = 0; c < categories.size(); ++c) out.columns[c][i] = it->second[c];
  }
  for (std::size_t c = 0; c < categories.size(); ++c)
    out.meta.push_back({column.name + "_sim_" + std::to_string(c), column.name, EncoderId::Similarity, c});
  return out;
}

EncodedMatrix similarity_encode(const Column& column) { return similarity_encode(column, unique_values(column)); }

std::vector<double> minhash_signature(std::string_view value, std::size_t k, std::uint64_t seed) {
  const auto grams = ngram_set(value);
  std::vector<std::uint64_t> base;
  base.reserve(grams.size());
  for (const auto& g : grams) base.push_back(fnv1a64(g));
  std::vector<double> sig(k);
  for (std::size_t j = 0; j < k; ++j) {
    const std::uint64_t salt = splitmix64(seed ^ splitmix64(j + 1));
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (auto b : base) best = std::min(best, splitmix64(b ^ salt));
    sig[j] = std::ldexp(static_cast<double>(best), -64);
  }
  return sig;
}

EncodedMatrix minhash_encode(const Column& column, std::size_t k, std::uint64_t seed) {
  if (k == 0) throw Error("minhash needs at least one hash");
  EncodedMatrix out;
  out.n_rows = column.size();
  out.columns.assign(k, std::vector<double>(column.size()));
  std::unordered_map<std::string, std::vector<double>> cache;
  for (std::size_t i = 0; i < column.size(); ++i) {
    const std::string text = encoding_text(column.cells[i]);
    auto it = cache.find(text);
    if (it == cache.end()) it = cache.emplace(text, minhash_signature(text, k, seed)).first;
    for (std::size_t j = 0; j < k; ++j) out.columns[j][i] = it->second[j];
  }
  for (std::size_t j = 0; j < k; ++j)
    out.meta.push_back({column.name + "_minhash_" + std::to_string(j), column.name, EncoderId::MinHash, j});
  return out;
}

EncodedMatrix target_encode(const Column& column, std::span<const double> target, double smoothing) {
  if (target.size() != column.size()) throw DimensionMismatch("target length differs from column length");
  double global = 0.0;
  std::size_t n = 0;
  std::map<std::string, std::pair<double, std::size_t>> stats;
  for (std::size_t i = 0; i < column.size(); ++i) {
    if (std::isnan(target[i])) continue;
    auto& s = stats[encoding_text(column.cells[i])];
    s.first += target[i];
    ++s.second;
    global += target[i];
    ++n;
  }
  global = n == 0 ? 0.0 : global / static_cast<double>(n);
  EncodedMatrix out;
  out.n_rows = column.size();
  out.columns.emplace_back(column.size());
  for (std::size_t i = 0; i < column.size(); ++i) {
    auto it = stats.find(encoding_text(column.cells[i]));
    const double sum = it == stats.end() ? 0.0 : it->second.first;
    const double count = it == stats.end() ? 0.0 : static_cast<double>(it->second.second);
    out.columns[0][i] = count + smoothing > 0 ? (sum + smoothing * global) / (count + smoothing) : global;
  }
  out.meta.push_back({column.name + "_target", column.name, EncoderId::Target, 0});
  return out;
}

}  // namespace strclean
