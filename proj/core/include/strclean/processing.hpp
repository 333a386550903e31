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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "strclean/geo.hpp"
#include "strclean/table.hpp"

namespace strclean {

enum class Directive { AlreadyNumeric, NominalEncode, OrdinalEncode };

std::string_view directive_name(Directive d);

struct ProcessedOutput {
  Column column;
  Directive directive = Directive::NominalEncode;
};

struct ProcessedColumns {
  std::vector<ProcessedOutput> outputs;
  /// Per-cell parse failures and lookup misses.
  std::vector<std::string> warnings;
};

enum class Cardinal { N, E, S, W };

/// Signed decimal degrees; negative for S and W. Throws OutOfRange for
/// negative components, minutes or seconds outside [0,60), or a magnitude
/// beyond 90 (N/S) or 180 (E/W).
double dms_to_decimal(double degrees, double minutes, double seconds, Cardinal direction);

struct CoordinatePart {
  Cardinal direction = Cardinal::N;
  double degrees = 0.0;
  double minutes = 0.0;
  double seconds = 0.0;
};

/// Splits "N29.10.56 W90.00.00", "29°10'56.22\"N" and similar into parts.
/// Throws ParseFailure.
std::vector<CoordinatePart> parse_coordinate(std::string_view text);

/// Latitude and/or longitude columns; with both, ECEF and (given a geo
/// table) nearest postal and country code columns.
ProcessedColumns process_coordinate(const Column& column, const GeoTable* geo = nullptr);

ProcessedColumns process_day(const Column& column);

Column strip_common_affixes(const Column& column, bool strip_prefix, bool strip_suffix);

ProcessedColumns process_email(const Column& column);
ProcessedColumns process_filepath(const Column& column);
ProcessedColumns process_url(const Column& column);

struct MonthDate {
  int year = 0;
  int month = 0;
  int day = 0;

  std::int64_t yyyymmdd() const { return std::int64_t{year} * 10000 + month * 100 + day; }
};

/// Year/month/day with absent parts zero; 'NN years pivot at 30. Throws ParseFailure.
MonthDate parse_month(std::string_view text);

ProcessedColumns process_month(const Column& column);

struct NumberSpan {
  double value = 0.0;
  std::size_t begin = 0;
  std::size_t end = 0;
};

/// Unsigned decimals in order; "1,000" reads as one thousand.
std::vector<NumberSpan> extract_numbers(std::string_view text);

/// Endpoints of "a-b", "a to b" or "a_b" with optional affix symbols.
std::optional<std::pair<double, double>> parse_range(std::string_view text);

/// Range means when at least `range_majority` of entries are ranges,
/// otherwise one column per number position.
ProcessedColumns process_numerical(const Column& column, double range_majority = 0.5);

/// Lexicon plus suffix heuristic for picking nouns out of free text.
class NounFilter {
 public:
  NounFilter() = default;
  NounFilter(std::unordered_set<std::string> nouns, std::unordered_set<std::string> stopwords);
  /// One token per line; throws IoError.
  static NounFilter load(const std::filesystem::path& nouns, const std::filesystem::path& stopwords);

  bool is_stopword(std::string_view token) const;
  bool is_noun(std::string_view token) const;
  /// Kept nouns joined by single spaces; the first non-stopword token if
  /// none survive (`fallback` is set), or "" for a token-free input.
  std::string reduce(std::string_view sentence, bool* fallback = nullptr) const;

 private:
  std::unordered_set<std::string> nouns_;
  std::unordered_set<std::string> stopwords_;
};

ProcessedColumns process_sentence(const Column& column, const NounFilter& filter);

/// Zip kept as nominal plus latitude, longitude, ECEF and country columns.
/// Without a geo table only the zip column is produced.
ProcessedColumns process_zip(const Column& column, const GeoTable* geo);

}  // namespace strclean
