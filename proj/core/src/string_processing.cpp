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
#include <array>
#include <cctype>
#include <set>
#include <string>

#include "strclean/error.hpp"
#include "strclean/processing.hpp"
#include "strclean/text.hpp"

namespace strclean {

namespace {

constexpr std::array<std::string_view, 7> kDayCodes = {"Mo", "Tu", "We", "Th", "Fr", "Sa", "Su"};

/// Drops ASCII punctuation, whitespace and control bytes; UTF-8 letters survive.
std::string remove_special(std::string_view s) {
  std::string out;
  for (char c : s) {
    const auto u = static_cast<unsigned char>(c);
    if (u >= 0x80 || std::isalnum(u)) out.push_back(c);
  }
  return out;
}

/// Shrinks `n` so it does not cut a UTF-8 sequence when taken from the front.
std::size_t prefix_boundary(std::string_view s, std::size_t n) {
  while (n > 0 && n < s.size() && (static_cast<unsigned char>(s[n]) & 0xC0) == 0x80) --n;
  return n;
}

std::size_t suffix_boundary(std::string_view s, std::size_t n) {
  while (n > 0 && n < s.size() && (static_cast<unsigned char>(s[s.size() - n]) & 0xC0) == 0x80) --n;
  return n;
}

ProcessedColumns affix_output(const Column& column, bool prefix, bool suffix) {
  ProcessedColumns out;
  out.outputs.push_back({strip_common_affixes(column, prefix, suffix), Directive::NominalEncode});
  return out;
}

}  // namespace

std::string_view directive_name(Directive d) {
  switch (d) {
    case Directive::AlreadyNumeric: return "AlreadyNumeric";
    case Directive::NominalEncode: return "NominalEncode";
    case Directive::OrdinalEncode: return "OrdinalEncode";
  }
  return "NominalEncode";
}

ProcessedColumns process_day(const Column& column) {
  Column out{column.name, {}};
  out.cells.reserve(column.size());
  for (const auto& cell : column.cells) {
    if (cell.is_missing()) {
      out.cells.push_back(cell);
      continue;
    }
    const std::string lower = to_lower(trim(cell.to_string()));
    Cell mapped = Cell::text(cell.to_string());
    for (auto code : kDayCodes)
      if (lower.size() >= 2 && lower.compare(0, 2, to_lower(code)) == 0) mapped = Cell::text(std::string(code));
    out.cells.push_back(mapped);
  }
  ProcessedColumns result;
  result.outputs.push_back({std::move(out), Directive::NominalEncode});
  return result;
}

Column strip_common_affixes(const Column& column, bool strip_prefix, bool strip_suffix) {
  std::vector<std::string> values;
  std::set<std::string> distinct;
  for (const auto& cell : column.cells)
    if (!cell.is_missing()) {
      values.push_back(cell.to_string());
      distinct.insert(values.back());
    }

  std::size_t pre = 0, suf = 0;
  if (distinct.size() >= 2) {
    const std::string& first = values.front();
    std::size_t min_len = first.size();
    for (const auto& v : values) min_len = std::min(min_len, v.size());
    if (strip_prefix) {
      pre = min_len;
      for (const auto& v : values) {
        std::size_t k = 0;
        while (k < pre && v[k] == first[k]) ++k;
        pre = k;
      }
      for (const auto& v : values) pre = prefix_boundary(v, pre);
    }
    if (strip_suffix) {
      suf = min_len - pre;
      for (const auto& v : values) {
        std::size_t k = 0;
        while (k < suf && v[v.size() - 1 - k] == first[first.size() - 1 - k]) ++k;
        suf = k;
      }
      for (const auto& v : values) suf = suffix_boundary(v, suf);
    }
    const bool empties_all = std::all_of(values.begin(), values.end(), [&](const std::string& v) {
      return remove_special(std::string_view(v).substr(pre, v.size() - pre - suf)).empty();
    });
    if (empties_all) pre = suf = 0;
  }

  Column out{column.name, {}};
  out.cells.reserve(column.size());
  for (const auto& cell : column.cells) {
    if (cell.is_missing()) {
      out.cells.push_back(cell);
      continue;
    }
    const std::string v = cell.to_string();
    std::string stripped = remove_special(std::string_view(v).substr(pre, v.size() - pre - suf));
    // An entry that was nothing but the shared affix keeps its own characters.
    if (stripped.empty()) stripped = remove_special(v);
    out.cells.push_back(stripped.empty() ? cell : Cell::text(std::move(stripped)));
  }
  return out;
}

ProcessedColumns process_email(const Column& column) { return affix_output(column, false, true); }
ProcessedColumns process_filepath(const Column& column) { return affix_output(column, true, true); }
ProcessedColumns process_url(const Column& column) { return affix_output(column, true, true); }

ProcessedColumns process_zip(const Column& column, const GeoTable* geo) {
  ProcessedColumns out;
  out.outputs.push_back({column, Directive::NominalEncode});
  if (geo == nullptr || geo->empty()) {
    out.warnings.push_back(column.name + ": no geo table, zip passed through as nominal");
    return out;
  }
  const std::size_t n = column.size();
  std::vector<Cell> lat(n), lon(n), x(n), y(n), z(n), country(n);
  ZipResolver resolver(*geo);
  for (std::size_t i = 0; i < n; ++i) {
    const Cell& cell = column.cells[i];
    if (cell.is_missing()) continue;
    const auto record = resolver.lookup(cell.to_string());
    if (!record) {
      out.warnings.push_back(column.name + " row " + std::to_string(i) + ": zip '" + cell.to_string() +
                             "' not in geo table");
      continue;
    }
    const EcefPoint p = latlon_to_ecef(record->latitude, record->longitude);
    lat[i] = Cell::number(record->latitude);
    lon[i] = Cell::number(record->longitude);
    x[i] = Cell::number(p.x);
    y[i] = Cell::number(p.y);
    z[i] = Cell::number(p.z);
    country[i] = Cell::text(record->country_code);
  }
  out.outputs.push_back({{column.name + "_lat", lat}, Directive::AlreadyNumeric});
  out.outputs.push_back({{column.name + "_lon", lon}, Directive::AlreadyNumeric});
  out.outputs.push_back({{column.name + "_ecef_x", x}, Directive::AlreadyNumeric});
  out.outputs.push_back({{column.name + "_ecef_y", y}, Directive::AlreadyNumeric});
  out.outputs.push_back({{column.name + "_ecef_z", z}, Directive::AlreadyNumeric});
  out.outputs.push_back({{column.name + "_country", country}, Directive::NominalEncode});
  return out;
}

}  // namespace strclean
