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
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace strclean {

/// One table cell. Text is never empty and Number is never NaN; both
/// degenerate inputs collapse to Missing at construction.
class Cell {
 public:
  struct Missing {
    bool operator==(const Missing&) const = default;
  };
  using Value = std::variant<Missing, std::string, double, std::int64_t>;

  Cell() = default;

  static Cell missing() { return Cell(); }
  static Cell text(std::string s);
  static Cell number(double d);
  static Cell integer(std::int64_t i);

  bool is_missing() const { return std::holds_alternative<Missing>(value_); }
  bool is_text() const { return std::holds_alternative<std::string>(value_); }
  bool is_number() const { return std::holds_alternative<double>(value_); }
  bool is_integer() const { return std::holds_alternative<std::int64_t>(value_); }
  bool is_numeric() const { return is_number() || is_integer(); }

  const std::string& as_text() const { return std::get<std::string>(value_); }
  double as_number() const { return std::get<double>(value_); }
  std::int64_t as_integer() const { return std::get<std::int64_t>(value_); }
  /// Integer or Number widened to double. Throws std::bad_variant_access otherwise.
  double numeric_value() const;

  /// Canonical string form: text as-is, numbers in shortest round-trip
  /// notation (Numbers always carry a '.' or exponent), Missing as "".
  std::string to_string() const;

  const Value& value() const { return value_; }

  bool operator==(const Cell&) const = default;

 private:
  explicit Cell(Value v) : value_(std::move(v)) {}
  Value value_;
};

std::ostream& operator<<(std::ostream& os, const Cell& cell);

struct Column {
  std::string name;
  std::vector<Cell> cells;

  std::size_t size() const { return cells.size(); }
  std::size_t count_missing() const;
  bool operator==(const Column&) const = default;
};

/// Ordered set of equally long, uniquely named columns.
class Table {
 public:
  Table() = default;
  explicit Table(std::size_t n_rows) : n_rows_(n_rows) {}

  std::size_t n_rows() const { return n_rows_; }
  std::size_t n_cols() const { return columns_.size(); }
  const std::vector<Column>& columns() const { return columns_; }

  const Column& column(std::size_t i) const { return columns_.at(i); }
  Column& column(std::size_t i) { return columns_.at(i); }
  const Column* find(std::string_view name) const;
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Appends a column. The first column of an empty table fixes n_rows.
  /// Throws Error on a length mismatch or a duplicate name.
  void add_column(Column column);
  void remove_column(std::size_t i);
  /// Returns `base` if unused, else `base_2`, `base_3`, ...
  std::string unique_name(std::string_view base) const;

  bool operator==(const Table&) const = default;

 private:
  std::size_t n_rows_ = 0;
  std::vector<Column> columns_;
};

const std::vector<std::string>& default_missing_tokens();

struct ReadOptions {
  char delimiter = ',';
  bool has_header = true;
  std::vector<std::string> missing_tokens = default_missing_tokens();
};

struct ReadStats {
  /// Fields in which invalid UTF-8 bytes were replaced by U+FFFD.
  std::size_t repaired_fields = 0;
};

/// Classifies one unquoted raw field: Integer, then Number, then Missing
/// (empty or a missing token, case-insensitive), else Text.
Cell parse_field(std::string_view raw, const std::vector<std::string>& missing_tokens);
bool is_missing_token(std::string_view raw, const std::vector<std::string>& missing_tokens);

/// RFC 4180 reader. Quoted fields skip numeric detection, so a quoted
/// "42" stays Text; missing tokens apply to quoted and unquoted fields.
Table read_delimited(std::istream& in, const ReadOptions& options = {}, ReadStats* stats = nullptr);
Table read_delimited(const std::filesystem::path& path, const ReadOptions& options = {},
                     ReadStats* stats = nullptr);

void write_delimited(const Table& table, std::ostream& out, char delimiter = ',');
void write_delimited(const Table& table, const std::filesystem::path& path, char delimiter = ',');

}  // namespace strclean
