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
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "strclean/encoders.hpp"
#include "strclean/error.hpp"

namespace strclean {

namespace {

EncodedMatrix rank_column(const Column& column, const std::vector<std::string>& order, EncoderId id,
                          std::string_view suffix) {
  std::unordered_map<std::string, double> rank;
  for (std::size_t r = 0; r < order.size(); ++r) rank.emplace(order[r], static_cast<double>(r));
  EncodedMatrix out;
  out.n_rows = column.size();
  out.columns.emplace_back(column.size());
  for (std::size_t i = 0; i < column.size(); ++i) out.columns[0][i] = rank.at(encoding_text(column.cells[i]));
  out.meta.push_back({column.name + std::string(suffix), column.name, id, 0});
  return out;
}

std::vector<double> average_ranks(std::span<const double> x) {
  std::vector<std::size_t> idx(x.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> ranks(x.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j + 1 < idx.size() && x[idx[j + 1]] == x[idx[i]]) ++j;
    const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[idx[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

std::vector<std::string> ordinal_order(const Column& column, const SentimentLexicon& lexicon) {
  std::vector<std::string> values = unique_values(column);
  std::vector<double> scores;
  for (const auto& v : values) scores.push_back(sentiment_intensity(v, lexicon));
  std::vector<std::size_t> idx(values.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  std::vector<std::string> order;
  for (auto i : idx) order.push_back(values[i]);
  return order;
}

EncodedMatrix ordinal_encode(const Column& column, const SentimentLexicon& lexicon) {
  return rank_column(column, ordinal_order(column, lexicon), EncoderId::Ordinal, "_ordinal");
}

std::vector<std::string> baseline_order(const Column& column) {
  auto values = unique_values(column);
  std::sort(values.begin(), values.end());
  return values;
}

EncodedMatrix baseline_ordinal_encode(const Column& column) {
  return rank_column(column, baseline_order(column), EncoderId::BaselineOrdinal, "_baseline");
}

double spearman_rank_correlation(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DimensionMismatch("rank vectors differ in length");
  const std::size_t u = a.size();
  if (u < 2) return 1.0;
  const auto ra = average_ranks(a);
  const auto rb = average_ranks(b);
  double d2 = 0.0;
  for (std::size_t i = 0; i < u; ++i) d2 += (ra[i] - rb[i]) * (ra[i] - rb[i]);
  const double n = static_cast<double>(u);
  return std::clamp(1.0 - 6.0 * d2 / (n * (n * n - 1.0)), -1.0, 1.0);
}

double spearman_rank_correlation(const std::vector<std::string>& order_a, const std::vector<std::string>& order_b) {
  std::map<std::string, std::size_t> pos_b;
  for (std::size_t i = 0; i < order_b.size(); ++i)
    if (!pos_b.emplace(order_b[i], i).second) throw MismatchedItems("duplicate item '" + order_b[i] + "'");
  if (order_a.size() != order_b.size()) throw MismatchedItems("rankings have different item counts");
  std::set<std::string> seen;
  std::vector<double> ra, rb;
  for (std::size_t i = 0; i < order_a.size(); ++i) {
    if (!seen.insert(order_a[i]).second) throw MismatchedItems("duplicate item '" + order_a[i] + "'");
    auto it = pos_b.find(order_a[i]);
    if (it == pos_b.end()) throw MismatchedItems("item '" + order_a[i] + "' missing from second ranking");
    ra.push_back(static_cast<double>(i));
    rb.push_back(static_cast<double>(it->second));
  }
  return spearman_rank_correlation(ra, rb);
}

}  // namespace strclean
