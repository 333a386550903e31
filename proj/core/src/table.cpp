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

#include "strclean/table.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "strclean/error.hpp"
#include "strclean/text.hpp"

namespace strclean {

RaggedRows::RaggedRows(std::size_t row, std::size_t expected, std::size_t actual)
    : Error("row " + std::to_string(row) + " has " + std::to_string(actual) + " fields, expected " +
            std::to_string(expected)),
      row_(row) {}

Cell Cell::text(std::string s) {
  if (s.empty()) return Cell();
  return Cell(Value(std::move(s)));
}

Cell Cell::number(double d) {
  if (std::isnan(d)) return Cell();
  return Cell(Value(d));
}

Cell Cell::integer(std::int64_t i) { return Cell(Value(i)); }

double Cell::numeric_value() const {
  if (is_integer()) return static_cast<double>(as_integer());
  return std::get<double>(value_);
}

std::string Cell::to_string() const {
  if (is_missing()) return {};
  if (is_text()) return as_text();
  if (is_integer()) return std::to_string(as_integer());
  std::string s = format_double(as_number());
  if (s.find_first_of(".eEni") == std::string::npos) s += ".0";
  return s;
}

std::ostream& operator<<(std::ostream& os, const Cell& cell) {
  if (cell.is_missing()) return os << "<missing>";
  if (cell.is_text()) return os << '"' << cell.as_text() << '"';
  return os << cell.to_string();
}

std::size_t Column::count_missing() const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [](const Cell& c) { return c.is_missing(); }));
}

const Column* Table::find(std::string_view name) const {
  for (const auto& c : columns_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::optional<std::size_t> Table::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i].name == name) return i;
  }
  return std::nullopt;
}

void Table::add_column(Column column) {
  if (columns_.empty() && n_rows_ == 0) n_rows_ = column.cells.size();
  if (column.cells.size() != n_rows_) {
    throw Error("column '" + column.name + "' has " + std::to_string(column.cells.size()) +
                " rows, table has " + std::to_string(n_rows_));
  }
  if (find(column.name) != nullptr) throw Error("duplicate column name '" + column.name + "'");
  columns_.push_back(std::move(column));
}

void Table::remove_column(std::size_t i) {
  columns_.erase(columns_.begin() + static_cast<std::ptrdiff_t>(i));
}

std::string Table::unique_name(std::string_view base) const {
  std::string name(base);
  for (int k = 2; find(name) != nullptr; ++k) name = std::string(base) + "_" + std::to_string(k);
  return name;
}

const std::vector<std::string>& default_missing_tokens() {
  static const std::vector<std::string> tokens = {"", "NA", "N/A", "null", "NaN", "?"};
  return tokens;
}

bool is_missing_token(std::string_view raw, const std::vector<std::string>& missing_tokens) {
  const std::string lowered = to_lower(raw);
  return std::any_of(missing_tokens.begin(), missing_tokens.end(),
                     [&](const std::string& t) { return to_lower(t) == lowered; });
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

bool looks_like_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  return all_digits(s);
}

// [+-]? (digits [. digits?] | . digits) ([eE] [+-]? digits)?
bool looks_like_float(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t int_digits = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++int_digits;
  std::size_t frac_digits = 0;
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++frac_digits;
  }
  if (int_digits + frac_digits == 0) return false;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t exp_digits = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++exp_digits;
    if (exp_digits == 0) return false;
  }
  return i == s.size();
}

std::optional<double> parse_double(std::string_view s) {
  if (!looks_like_float(s)) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double d = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), d);
  if (ec == std::errc::result_out_of_range) {
    return s.front() == '-' ? -HUGE_VAL : HUGE_VAL;
  }
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return d;
}

}  // namespace

Cell parse_field(std::string_view raw, const std::vector<std::string>& missing_tokens) {
  if (raw.empty() || is_missing_token(raw, missing_tokens)) return Cell::missing();
  if (looks_like_integer(raw)) {
    std::string_view digits = raw.front() == '+' ? raw.substr(1) : raw;
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return Cell::integer(v);
  }
  if (auto d = parse_double(raw)) return Cell::number(*d);
  return Cell::text(std::string(raw));
}

namespace {

struct RawField {
  std::string text;
  bool quoted = false;
};

// Reads one RFC 4180 record. Returns false at end of input.
bool read_record(std::istream& in, char delim, std::vector<RawField>& fields) {
  fields.clear();
  int ch = in.get();
  if (ch == EOF) return false;
  RawField cur;
  bool in_quotes = false;
  bool at_field_start = true;
  while (true) {
    if (ch == EOF) {
      fields.push_back(std::move(cur));
      return true;
    }
    const char c = static_cast<char>(ch);
    if (in_quotes) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get();
          cur.text.push_back('"');
        } else {
          in_quotes = false;
        }
      } else {
        cur.text.push_back(c);
      }
    } else if (c == '"' && at_field_start) {
      in_quotes = true;
      cur.quoted = true;
    } else if (c == delim) {
      fields.push_back(std::move(cur));
      cur = RawField{};
      at_field_start = true;
      ch = in.get();
      continue;
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && in.peek() == '\n') in.get();
      fields.push_back(std::move(cur));
      return true;
    } else {
      cur.text.push_back(c);
    }
    at_field_start = false;
    ch = in.get();
  }
}

bool is_blank_record(const std::vector<RawField>& fields) {
  return fields.size() == 1 && !fields[0].quoted && fields[0].text.empty();
}

}  // namespace

Table read_delimited(std::istream& in, const ReadOptions& options, ReadStats* stats) {
  std::vector<RawField> fields;
  std::vector<std::string> names;
  std::vector<std::vector<Cell>> cols;
  bool have_width = false;
  std::size_t row = 0;
  std::size_t repaired = 0;

  auto repair = [&](std::string& s) {
    if (repair_utf8(s)) ++repaired;
  };

  while (read_record(in, options.delimiter, fields)) {
    if (is_blank_record(fields)) continue;
    if (!have_width) {
      have_width = true;
      cols.resize(fields.size());
      if (options.has_header) {
        for (auto& f : fields) {
          repair(f.text);
          std::string name = f.text;
          std::string candidate = name;
          for (int k = 2; std::find(names.begin(), names.end(), candidate) != names.end(); ++k) {
            candidate = name + "_" + std::to_string(k);
          }
          names.push_back(candidate);
        }
        continue;
      }
      for (std::size_t i = 0; i < fields.size(); ++i) names.push_back("col_" + std::to_string(i));
    }
    if (fields.size() != names.size()) throw RaggedRows(row, names.size(), fields.size());
    for (std::size_t i = 0; i < fields.size(); ++i) {
      repair(fields[i].text);
      if (fields[i].quoted) {
        cols[i].push_back(is_missing_token(fields[i].text, options.missing_tokens)
                              ? Cell::missing()
                              : Cell::text(fields[i].text));
      } else {
        cols[i].push_back(parse_field(fields[i].text, options.missing_tokens));
      }
    }
    ++row;
  }
  if (stats != nullptr) stats->repaired_fields = repaired;

  Table table(row);
  for (std::size_t i = 0; i < names.size(); ++i) {
    table.add_column(Column{names[i], std::move(cols[i])});
  }
  return table;
}

Table read_delimited(const std::filesystem::path& path, const ReadOptions& options, ReadStats* stats) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_delimited(in, options, stats);
}

namespace {

void write_field(std::ostream& out, const std::string& s, char delim, bool force_quote) {
  const bool needs_quote = force_quote || s.find(delim) != std::string::npos ||
                           s.find_first_of("\"\r\n") != std::string::npos;
  if (!needs_quote) {
    out << s;
    return;
  }
  out << '"';
  for (char c : s) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

}  // namespace

void write_delimited(const Table& table, std::ostream& out, char delimiter) {
  if (table.n_cols() == 0) return;
  const auto& cols = table.columns();
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (j > 0) out << delimiter;
    write_field(out, cols[j].name, delimiter, cols[j].name.empty());
  }
  out << '\n';
  const auto& tokens = default_missing_tokens();
  for (std::size_t r = 0; r < table.n_rows(); ++r) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (j > 0) out << delimiter;
      const Cell& cell = cols[j].cells[r];
      if (cell.is_text()) {
        // Text that would re-parse as a number must be quoted to stay text.
        const bool ambiguous = !parse_field(cell.as_text(), tokens).is_text();
        write_field(out, cell.as_text(), delimiter, ambiguous);
      } else if (cell.is_missing() && cols.size() == 1) {
        out << "\"\"";  // a bare empty line would read back as a blank record
      } else {
        out << cell.to_string();
      }
    }
    out << '\n';
  }
}

void write_delimited(const Table& table, const std::filesystem::path& path, char delimiter) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  write_delimited(table, out, delimiter);
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace strclean
