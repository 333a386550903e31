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
#include <string>
#include <unordered_map>
#include <vector>

#include "strclean/error.hpp"
#include "strclean/cleaning.hpp"

namespace strclean {

namespace {

/// Distance capped at `limit + 1`; rows whose minimum exceeds the cap exit early.
std::size_t bounded_levenshtein(std::string_view a, std::string_view b, std::size_t limit) {
  const std::size_t gap = a.size() > b.size() ? a.size() - b.size() : b.size() - a.size();
  if (gap > limit) return limit + 1;
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    std::size_t row_min = cur[0];
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
      row_min = std::min(row_min, cur[j]);
    }
    if (row_min > limit) return limit + 1;
    std::swap(prev, cur);
  }
  return std::min(prev[b.size()], limit + 1);
}

}  // namespace

std::size_t levenshtein(std::string_view a, std::string_view b) {
  return bounded_levenshtein(a, b, std::max(a.size(), b.size()));
}

std::pair<Column, RepairLog> correct_typos(const Column& column, const TypoOptions& options) {
  Column out = column;
  std::map<std::size_t, std::size_t> entry_of_row;
  RepairLog log;

  for (;;) {
    std::vector<std::string> order;
    std::unordered_map<std::string, std::size_t> counts;
    for (const auto& cell : out.cells) {
      if (!cell.is_text()) continue;
      if (counts[cell.as_text()]++ == 0) order.push_back(cell.as_text());
    }
    std::size_t max_count = 0;
    for (const auto& [value, c] : counts) max_count = std::max(max_count, c);

    std::unordered_map<std::string, std::string> rewrite;
    for (const auto& v : order) {
      const std::size_t cv = counts[v];
      if (static_cast<double>(max_count) < options.min_support * static_cast<double>(cv)) continue;
      std::size_t best = options.max_dist + 1;
      const std::string* target = nullptr;
      bool tie = false;
      for (const auto& w : order) {
        if (w == v || static_cast<double>(counts[w]) < options.min_support * static_cast<double>(cv)) continue;
        const std::size_t d = bounded_levenshtein(v, w, options.max_dist);
        if (d > options.max_dist) continue;
        if (d < best) {
          best = d;
          target = &w;
          tie = false;
        } else if (d == best) {
          tie = true;
        }
      }
      if (target != nullptr && !tie) rewrite.emplace(v, *target);
    }
    if (rewrite.empty()) break;

    for (std::size_t row = 0; row < out.cells.size(); ++row) {
      Cell& cell = out.cells[row];
      if (!cell.is_text()) continue;
      auto it = rewrite.find(cell.as_text());
      if (it == rewrite.end()) continue;
      const Cell replacement = Cell::text(it->second);
      auto existing = entry_of_row.find(row);
      if (existing == entry_of_row.end()) {
        entry_of_row[row] = log.entries.size();
        log.entries.push_back({column.name, row, RepairAction::TypoFixed, cell, replacement});
      } else {
        log.entries[existing->second].new_value = replacement;
      }
      cell = replacement;
    }
  }
  std::sort(log.entries.begin(), log.entries.end(),
            [](const RepairEntry& a, const RepairEntry& b) { return a.row < b.row; });
  return {std::move(out), std::move(log)};
}

}  // namespace strclean
