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

#include <fstream>
#include <optional>
#include <sstream>

#include "strclean/error.hpp"
#include "strclean/hashing.hpp"
#include "strclean/ordinality.hpp"
#include "strclean/text.hpp"

namespace strclean {

EmbeddingStore::EmbeddingStore(std::size_t dimension, std::uint64_t fallback_seed)
    : dimension_(dimension), fallback_seed_(fallback_seed) {
  if (dimension == 0) throw DimensionMismatch("embedding dimension must be positive");
}

bool EmbeddingStore::add(std::string token, std::vector<double> vector) {
  if (vector.size() != dimension_)
    throw DimensionMismatch("vector for '" + token + "' has " + std::to_string(vector.size()) +
                            " components, expected " + std::to_string(dimension_));
  return vectors_.try_emplace(std::move(token), std::move(vector)).second;
}

bool EmbeddingStore::contains(std::string_view token) const { return vectors_.count(std::string(token)) > 0; }

std::vector<double> EmbeddingStore::vector(std::string_view token) const {
  auto it = vectors_.find(std::string(token));
  if (it != vectors_.end()) return it->second;
  std::vector<double> v(dimension_);
  std::uint64_t state = fnv1a64(token) ^ splitmix64(fallback_seed_);
  for (auto& x : v) {
    state = splitmix64(state);
    x = 2.0 * unit_interval(state) - 1.0;
  }
  return v;
}

EmbeddingStore EmbeddingStore::parse(std::istream& in, std::uint64_t fallback_seed) {
  std::optional<EmbeddingStore> store;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = split_whitespace(line);
    if (fields.empty()) continue;
    std::vector<double> v;
    v.reserve(fields.size() - 1);
    for (std::size_t i = 1; i < fields.size(); ++i) {
      try {
        std::size_t used = 0;
        v.push_back(std::stod(fields[i], &used));
        if (used != fields[i].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw DimensionMismatch("line " + std::to_string(line_no) + ": non-numeric component");
      }
    }
    if (!store) {
      if (v.empty()) throw DimensionMismatch("line " + std::to_string(line_no) + ": no vector components");
      store.emplace(v.size(), fallback_seed);
    }
    if (v.size() != store->dimension())
      throw DimensionMismatch("line " + std::to_string(line_no) + ": expected " +
                              std::to_string(store->dimension()) + " components, got " + std::to_string(v.size()));
    store->add(fields[0], std::move(v));
  }
  if (!store) return EmbeddingStore(50, fallback_seed);
  return std::move(*store);
}

EmbeddingStore EmbeddingStore::load(const std::filesystem::path& path, std::uint64_t fallback_seed) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open embeddings " + path.string());
  return parse(in, fallback_seed);
}

double embedding_dispersion(const std::vector<std::string>& unique_values, const EmbeddingStore& store) {
  if (unique_values.size() < 2) return 0.0;
  const std::size_t d = store.dimension();
  std::vector<std::vector<double>> points;
  points.reserve(unique_values.size());
  for (const auto& value : unique_values) {
    auto words = word_tokens(value);
    if (words.empty()) words.push_back(to_lower(value));
    std::vector<double> point(d, 0.0);
    for (const auto& w : words) {
      const auto v = store.vector(w);
      for (std::size_t k = 0; k < d; ++k) point[k] += v[k];
    }
    for (auto& x : point) x /= static_cast<double>(words.size());
    points.push_back(std::move(point));
  }
  const auto n = static_cast<double>(points.size());
  double total = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    double mean = 0.0;
    for (const auto& p : points) mean += p[k];
    mean /= n;
    double var = 0.0;
    for (const auto& p : points) var += (p[k] - mean) * (p[k] - mean);
    total += var / n;
  }
  return total / static_cast<double>(d);
}

}  // namespace strclean
