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
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "strclean/error.hpp"
#include "strclean/ordinality.hpp"
#include "strclean/text.hpp"

namespace strclean {

namespace {

std::vector<std::string> lowered_lines(const std::filesystem::path& path) {
  std::vector<std::string> out;
  for (const auto& line : read_lines(path)) out.push_back(to_lower(trim(line)));
  return out;
}

bool contains_keyword(const std::string& value, const std::vector<std::string>& keywords) {
  const auto tokens = word_tokens(value);
  const std::unordered_set<std::string> token_set(tokens.begin(), tokens.end());
  const std::string padded = " " + [&] {
    std::string joined;
    for (const auto& t : tokens) joined += t + " ";
    return joined;
  }();
  for (const auto& k : keywords) {
    if (k.find(' ') == std::string::npos) {
      if (token_set.count(k)) return true;
    } else if (padded.find(" " + k + " ") != std::string::npos) {
      return true;
    }
  }
  return false;
}

}  // namespace

KeywordConfig KeywordConfig::load(const std::filesystem::path& dir) {
  KeywordConfig config;
  config.ordinal_names = lowered_lines(dir / "ordinal_names.txt");
  config.nominal_names = lowered_lines(dir / "nominal_names.txt");
  config.likert_values = lowered_lines(dir / "likert_values.txt");
  return config;
}

KeywordConfig KeywordConfig::builtin() {
  KeywordConfig config;
  config.ordinal_names = {"grade", "stage", "opinion", "rating", "level", "rank", "satisfaction", "severity"};
  config.nominal_names = {"address", "city", "name", "type", "country", "category", "color", "brand"};
  config.likert_values = {"agree", "disagree", "never", "rarely", "sometimes", "often", "always",
                          "low",   "medium",   "high",  "poor",   "fair",      "good",  "excellent"};
  return config;
}

FeatureVector OrdinalityFeatures::to_vector() const {
  return {static_cast<double>(n_rows),
          static_cast<double>(n_unique),
          unique_ratio,
          embedding_dispersion,
          name_is_ordinal ? 1.0 : 0.0,
          name_is_nominal ? 1.0 : 0.0,
          values_have_ordinal_keywords ? 1.0 : 0.0,
          values_share_substring ? 1.0 : 0.0};
}

nlohmann::json OrdinalityFeatures::to_json() const {
  return {{"n_rows", n_rows},
          {"n_unique", n_unique},
          {"unique_ratio", unique_ratio},
          {"embedding_dispersion", embedding_dispersion},
          {"name_is_ordinal", name_is_ordinal},
          {"name_is_nominal", name_is_nominal},
          {"values_have_ordinal_keywords", values_have_ordinal_keywords},
          {"values_share_substring", values_share_substring}};
}

bool share_common_substring(const std::vector<std::string>& unique_values, std::size_t min_length, double coverage) {
  if (unique_values.empty() || min_length == 0) return false;
  // A shared substring of length >= L implies a shared one of length exactly L.
  std::unordered_map<std::string, std::size_t> hits;
  for (const auto& value : unique_values) {
    const std::string lower = to_lower(value);
    if (lower.size() < min_length) continue;
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i + min_length <= lower.size(); ++i) seen.insert(lower.substr(i, min_length));
    for (const auto& s : seen) ++hits[s];
  }
  const double needed = coverage * static_cast<double>(unique_values.size());
  return std::any_of(hits.begin(), hits.end(),
                     [&](const auto& e) { return static_cast<double>(e.second) >= needed; });
}

bool name_matches(std::string_view name, const std::vector<std::string>& keywords) {
  const std::string lower = to_lower(trim(name));
  if (lower.empty()) return false;
  for (const auto& k : keywords) {
    if (k.empty()) continue;
    const std::string& shorter = k.size() < lower.size() ? k : lower;
    const std::string& longer = k.size() < lower.size() ? lower : k;
    if (shorter.size() >= 3 && longer.find(shorter) != std::string::npos) return true;
  }
  return false;
}

OrdinalityFeatures extract_features(const Column& column, std::string_view name, const EmbeddingStore& store,
                                    const KeywordConfig& keywords) {
  OrdinalityFeatures f;
  f.n_rows = column.size();
  std::set<std::string> distinct;
  for (const auto& cell : column.cells)
    if (!cell.is_missing()) distinct.insert(cell.to_string());
  const std::vector<std::string> unique(distinct.begin(), distinct.end());
  f.n_unique = unique.size();
  f.unique_ratio = f.n_rows == 0 ? 0.0 : static_cast<double>(f.n_unique) / static_cast<double>(f.n_rows);
  f.embedding_dispersion = embedding_dispersion(unique, store);
  f.name_is_ordinal = name_matches(name, keywords.ordinal_names);
  f.name_is_nominal = name_matches(name, keywords.nominal_names);
  f.values_have_ordinal_keywords = std::any_of(
      unique.begin(), unique.end(), [&](const std::string& v) { return contains_keyword(v, keywords.likert_values); });
  f.values_share_substring = share_common_substring(unique, keywords.min_substring, keywords.substring_coverage);
  return f;
}

std::string_view stat_type_name(StatType t) { return t == StatType::Ordinal ? "ordinal" : "nominal"; }

}  // namespace strclean
