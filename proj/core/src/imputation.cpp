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
#include <map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "strclean/error.hpp"
#include "strclean/cleaning.hpp"

namespace strclean {

namespace {

bool is_numeric_column(const Column& column) {
  return std::all_of(column.cells.begin(), column.cells.end(),
                     [](const Cell& c) { return c.is_missing() || c.is_numeric(); });
}

double observed_mean(const Column& column) {
  double sum = 0;
  std::size_t n = 0;
  for (const auto& c : column.cells)
    if (!c.is_missing()) {
      sum += c.numeric_value();
      ++n;
    }
  return sum / static_cast<double>(n);
}

/// Most frequent cell; ties go to the earliest first appearance.
Cell mode_of(const std::vector<const Cell*>& cells) {
  std::vector<std::pair<const Cell*, std::size_t>> counts;
  for (const Cell* c : cells) {
    auto it = std::find_if(counts.begin(), counts.end(), [&](const auto& e) { return *e.first == *c; });
    if (it == counts.end())
      counts.emplace_back(c, 1);
    else
      ++it->second;
  }
  const auto best = std::max_element(counts.begin(), counts.end(),
                                     [](const auto& a, const auto& b) { return a.second < b.second; });
  return *best->first;
}

Cell column_mode(const Column& column) {
  std::map<std::string, std::pair<std::size_t, std::size_t>> stats;  // key -> (count, first row)
  for (std::size_t i = 0; i < column.cells.size(); ++i) {
    const Cell& c = column.cells[i];
    if (c.is_missing()) continue;
    // Distinguish kinds so Text("1") and Integer(1) stay separate.
    const std::string key = std::to_string(c.value().index()) + ':' + c.to_string();
    auto it = stats.try_emplace(key, 0, i).first;
    ++it->second.first;
  }
  std::size_t best_row = 0, best_count = 0;
  for (const auto& [key, s] : stats)
    if (s.first > best_count || (s.first == best_count && s.second < best_row)) {
      best_count = s.first;
      best_row = s.second;
    }
  return column.cells[best_row];
}

}  // namespace

std::string_view action_name(RepairAction a) {
  switch (a) {
    case RepairAction::Imputed: return "Imputed";
    case RepairAction::TypoFixed: return "TypoFixed";
    case RepairAction::OutlierCoerced: return "OutlierCoerced";
  }
  return "Imputed";
}

void RepairLog::merge(const RepairLog& other) {
  std::map<std::pair<std::string, std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < entries.size(); ++i) index[{entries[i].column, entries[i].row}] = i;
  for (const auto& e : other.entries) {
    auto it = index.find({e.column, e.row});
    if (it != index.end()) {
      entries[it->second].new_value = e.new_value;
    } else {
      index[{e.column, e.row}] = entries.size();
      entries.push_back(e);
    }
  }
}

std::size_t RepairLog::count(RepairAction action) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [&](const RepairEntry& e) { return e.action == action; }));
}

nlohmann::json RepairLog::to_json() const {
  auto cell_json = [](const Cell& c) -> nlohmann::json {
    if (c.is_missing()) return nullptr;
    if (c.is_integer()) return c.as_integer();
    if (c.is_number()) return c.as_number();
    return c.as_text();
  };
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : entries)
    out.push_back({{"column", e.column},
                   {"row", e.row},
                   {"action", action_name(e.action)},
                   {"old", cell_json(e.old_value)},
                   {"new", cell_json(e.new_value)}});
  return out;
}

ImputeResult impute(const Table& table, const MissingnessDiagnosis& diagnosis, const ImputeOptions& options) {
  ImputeResult result;
  Table work(table.n_rows());
  for (const auto& column : table.columns()) {
    if (table.n_rows() > 0 && column.count_missing() == column.size())
      result.dropped_columns.push_back(column.name);
    else
      work.add_column(column);
  }
  const std::size_t n = work.n_rows();
  const std::size_t p = work.n_cols();

  std::vector<bool> numeric(p);
  std::vector<std::vector<std::size_t>> missing_rows(p);
  for (std::size_t j = 0; j < p; ++j) {
    const Column& column = work.column(j);
    numeric[j] = is_numeric_column(column);
    for (std::size_t i = 0; i < n; ++i)
      if (column.cells[i].is_missing()) missing_rows[j].push_back(i);
  }

  // Mean / mode initialization; also the final answer under MCAR.
  for (std::size_t j = 0; j < p; ++j) {
    if (missing_rows[j].empty()) continue;
    Column& column = work.column(j);
    const Cell fill = numeric[j] ? Cell::number(observed_mean(column)) : column_mode(column);
    for (auto i : missing_rows[j]) column.cells[i] = fill;
  }

  if (diagnosis.mechanism != Mechanism::MCAR) {
    std::vector<std::size_t> numeric_cols;
    for (std::size_t j = 0; j < p; ++j)
      if (numeric[j]) numeric_cols.push_back(j);

    for (int sweep = 0; sweep < options.sweeps; ++sweep) {
      for (std::size_t j = 0; j < p; ++j) {
        if (missing_rows[j].empty()) continue;
        std::vector<std::size_t> predictors;
        for (auto k : numeric_cols)
          if (k != j) predictors.push_back(k);
        if (predictors.empty()) continue;

        std::vector<bool> is_missing(n, false);
        for (auto i : missing_rows[j]) is_missing[i] = true;
        std::vector<std::size_t> train;
        for (std::size_t i = 0; i < n; ++i)
          if (!is_missing[i]) train.push_back(i);

        Column& target = work.column(j);
        if (numeric[j]) {
          const auto q = static_cast<Eigen::Index>(predictors.size());
          Eigen::MatrixXd a(static_cast<Eigen::Index>(train.size()), q + 1);
          Eigen::VectorXd b(static_cast<Eigen::Index>(train.size()));
          for (std::size_t r = 0; r < train.size(); ++r) {
            const auto row = static_cast<Eigen::Index>(r);
            a(row, 0) = 1.0;
            for (Eigen::Index k = 0; k < q; ++k)
              a(row, k + 1) = work.column(predictors[k]).cells[train[r]].numeric_value();
            b(row) = target.cells[train[r]].numeric_value();
          }
          const Eigen::VectorXd beta = a.colPivHouseholderQr().solve(b);
          for (auto i : missing_rows[j]) {
            double y = beta(0);
            for (Eigen::Index k = 0; k < q; ++k)
              y += beta(k + 1) * work.column(predictors[k]).cells[i].numeric_value();
            target.cells[i] = Cell::number(y);
          }
        } else {
          // Nearest observed rows in standardized numeric space vote.
          const std::size_t q = predictors.size();
          std::vector<std::vector<double>> z(q, std::vector<double>(n));
          for (std::size_t k = 0; k < q; ++k) {
            const Column& col = work.column(predictors[k]);
            double mean = 0, var = 0;
            for (std::size_t i = 0; i < n; ++i) mean += col.cells[i].numeric_value();
            mean /= static_cast<double>(n);
            for (std::size_t i = 0; i < n; ++i) {
              const double d = col.cells[i].numeric_value() - mean;
              var += d * d;
            }
            const double sd = var > 0 ? std::sqrt(var / static_cast<double>(n)) : 1.0;
            for (std::size_t i = 0; i < n; ++i) z[k][i] = (col.cells[i].numeric_value() - mean) / sd;
          }
          const std::size_t k_nn = std::min(options.neighbors, train.size());
          std::vector<std::pair<double, std::size_t>> dist(train.size());
          for (auto i : missing_rows[j]) {
            for (std::size_t r = 0; r < train.size(); ++r) {
              double d = 0;
              for (std::size_t k = 0; k < q; ++k) {
                const double diff = z[k][i] - z[k][train[r]];
                d += diff * diff;
              }
              dist[r] = {d, train[r]};
            }
            std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(k_nn), dist.end());
            std::vector<const Cell*> votes;
            for (std::size_t r = 0; r < k_nn; ++r) votes.push_back(&target.cells[dist[r].second]);
            target.cells[i] = mode_of(votes);
          }
        }
      }
    }
  }

  for (std::size_t j = 0; j < p; ++j)
    for (auto i : missing_rows[j])
      result.log.entries.push_back(
          {work.column(j).name, i, RepairAction::Imputed, Cell::missing(), work.column(j).cells[i]});
  result.table = std::move(work);
  return result;
}

}  // namespace strclean
