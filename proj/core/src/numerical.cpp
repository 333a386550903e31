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
#include <cctype>
#include <charconv>
#include <string>

#include "strclean/error.hpp"
#include "strclean/processing.hpp"
#include "strclean/text.hpp"

namespace strclean {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

bool is_affix(char c) { return c == '<' || c == '>' || c == '+' || c == '$' || c == '%' || c == '=' || c == ' '; }

bool only_affixes(std::string_view s) { return std::all_of(s.begin(), s.end(), is_affix); }

}  // namespace

std::vector<NumberSpan> extract_numbers(std::string_view text) {
  std::vector<NumberSpan> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_digit(text[i])) {
      ++i;
      continue;
    }
    const std::size_t begin = i;
    std::string digits;
    while (i < text.size() && is_digit(text[i])) digits.push_back(text[i++]);
    // Thousands groups: a comma followed by exactly three digits.
    while (i + 3 < text.size() && text[i] == ',' && is_digit(text[i + 1]) && is_digit(text[i + 2]) &&
           is_digit(text[i + 3]) && (i + 4 == text.size() || !is_digit(text[i + 4]))) {
      digits.append(text.substr(i + 1, 3));
      i += 4;
    }
    if (i + 1 < text.size() && text[i] == '.' && is_digit(text[i + 1])) {
      digits.push_back('.');
      ++i;
      while (i < text.size() && is_digit(text[i])) digits.push_back(text[i++]);
    }
    double value = 0;
    std::from_chars(digits.data(), digits.data() + digits.size(), value);
    out.push_back({value, begin, i});
  }
  return out;
}

std::optional<std::pair<double, double>> parse_range(std::string_view text) {
  const std::string lower = to_lower(trim(text));
  const auto numbers = extract_numbers(lower);
  if (numbers.size() != 2) return std::nullopt;
  const std::string_view s = lower;
  if (!only_affixes(s.substr(0, numbers[0].begin)) || !only_affixes(s.substr(numbers[1].end))) return std::nullopt;
  const std::string_view between = s.substr(numbers[0].end, numbers[1].begin - numbers[0].end);
  auto strip = [](std::string_view v) {
    while (!v.empty() && is_affix(v.front())) v.remove_prefix(1);
    while (!v.empty() && is_affix(v.back())) v.remove_suffix(1);
    return v;
  };
  const std::string_view core = strip(between);
  if (core == "-" || core == "_" || core == "to") return std::make_pair(numbers[0].value, numbers[1].value);
  return std::nullopt;
}

ProcessedColumns process_numerical(const Column& column, double range_majority) {
  ProcessedColumns out;
  const std::size_t n = column.size();
  std::size_t present = 0, ranges = 0;
  std::vector<std::optional<std::pair<double, double>>> parsed(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (column.cells[i].is_missing()) continue;
    ++present;
    parsed[i] = parse_range(column.cells[i].to_string());
    if (parsed[i]) ++ranges;
  }

  if (present > 0 && static_cast<double>(ranges) >= range_majority * static_cast<double>(present)) {
    Column means{column.name, std::vector<Cell>(n)};
    for (std::size_t i = 0; i < n; ++i) {
      if (parsed[i]) {
        means.cells[i] = Cell::number((parsed[i]->first + parsed[i]->second) / 2.0);
      } else if (!column.cells[i].is_missing()) {
        out.warnings.push_back(column.name + " row " + std::to_string(i) + ": not a range");
      }
    }
    out.outputs.push_back({std::move(means), Directive::AlreadyNumeric});
    return out;
  }

  std::vector<std::vector<double>> numbers(n);
  std::size_t width = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (column.cells[i].is_missing()) continue;
    for (const auto& span : extract_numbers(column.cells[i].to_string())) numbers[i].push_back(span.value);
    width = std::max(width, numbers[i].size());
  }
  width = std::max<std::size_t>(width, 1);
  for (std::size_t k = 0; k < width; ++k) {
    Column part{width == 1 ? column.name : column.name + "_" + std::to_string(k), std::vector<Cell>(n)};
    for (std::size_t i = 0; i < n; ++i)
      if (k < numbers[i].size()) part.cells[i] = Cell::number(numbers[i][k]);
    out.outputs.push_back({std::move(part), Directive::AlreadyNumeric});
  }
  return out;
}

}  // namespace strclean
