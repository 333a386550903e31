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

#include <array>
#include <cctype>
#include <string>
#include <vector>

#include "strclean/error.hpp"
#include "strclean/processing.hpp"
#include "strclean/text.hpp"

namespace strclean {

namespace {

constexpr std::array<std::string_view, 12> kMonths = {"january", "february", "march",     "april",
                                                       "may",     "june",     "july",      "august",
                                                       "september", "october", "november", "december"};
constexpr int kPivot = 30;

struct Token {
  enum Kind { Word, Number, ApostropheYear } kind;
  std::string text;
  bool ordinal = false;  // "1st", "2nd", ...
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_digit = [&](std::size_t k) { return k < s.size() && std::isdigit(static_cast<unsigned char>(s[k])); };
  auto is_alpha = [&](std::size_t k) { return k < s.size() && std::isalpha(static_cast<unsigned char>(s[k])); };
  while (i < s.size()) {
    if (s[i] == '\'' && is_digit(i + 1)) {
      std::size_t j = i + 1;
      while (is_digit(j)) ++j;
      out.push_back({Token::ApostropheYear, std::string(s.substr(i + 1, j - i - 1))});
      i = j;
    } else if (is_digit(i)) {
      std::size_t j = i;
      while (is_digit(j)) ++j;
      Token t{Token::Number, std::string(s.substr(i, j - i))};
      std::size_t k = j;
      while (is_alpha(k)) ++k;
      const std::string suffix(s.substr(j, k - j));
      if (suffix == "st" || suffix == "nd" || suffix == "rd" || suffix == "th") {
        t.ordinal = true;
        j = k;
      }
      out.push_back(std::move(t));
      i = j;
    } else if (is_alpha(i)) {
      std::size_t j = i;
      while (is_alpha(j)) ++j;
      out.push_back({Token::Word, std::string(s.substr(i, j - i))});
      i = j;
    } else {
      ++i;
    }
  }
  return out;
}

int month_number(const std::string& word) {
  if (word.size() < 3) return 0;
  for (std::size_t m = 0; m < kMonths.size(); ++m)
    if (word.size() <= kMonths[m].size() && kMonths[m].compare(0, word.size(), word) == 0)
      return static_cast<int>(m) + 1;
  return 0;
}

int to_int(const std::string& digits) {
  if (digits.size() > 4) throw ParseFailure("number too long in month value");
  return std::stoi(digits);
}

}  // namespace

MonthDate parse_month(std::string_view text) {
  const auto tokens = tokenize(to_lower(text));
  MonthDate date;
  std::size_t month_at = tokens.size();
  for (std::size_t i = 0; i < tokens.size(); ++i)
    if (tokens[i].kind == Token::Word) {
      date.month = month_number(tokens[i].text);
      if (date.month == 0) throw ParseFailure("unknown month word '" + tokens[i].text + "'");
      month_at = i;
      break;
    }
  if (month_at == tokens.size()) throw ParseFailure("no month name in '" + std::string(text) + "'");

  bool have_day = false;
  for (std::size_t i = 0; i < month_at; ++i) {
    if (tokens[i].kind != Token::Number || have_day) throw ParseFailure("unexpected text before month");
    date.day = to_int(tokens[i].text);
    have_day = true;
  }
  std::vector<const Token*> after;
  for (std::size_t i = month_at + 1; i < tokens.size(); ++i) {
    if (tokens[i].kind == Token::Word) throw ParseFailure("unexpected word after month");
    after.push_back(&tokens[i]);
  }
  auto read_year = [&](const Token& t) {
    if (t.kind == Token::ApostropheYear) {
      if (t.text.size() != 2) throw ParseFailure("apostrophe year must have two digits");
      const int nn = std::stoi(t.text);
      date.year = nn <= kPivot ? 2000 + nn : 1900 + nn;
    } else {
      if (t.ordinal) throw ParseFailure("ordinal in year position");
      date.year = to_int(t.text);
    }
  };
  if (after.size() == 1) {
    const Token& t = *after[0];
    if (!have_day && t.kind == Token::Number && (t.ordinal || t.text.size() <= 2)) {
      date.day = to_int(t.text);
      have_day = true;
    } else {
      read_year(t);
    }
  } else if (after.size() == 2) {
    if (have_day || after[0]->kind != Token::Number) throw ParseFailure("too many day components");
    date.day = to_int(after[0]->text);
    have_day = true;
    read_year(*after[1]);
  } else if (after.size() > 2) {
    throw ParseFailure("too many numbers in month value");
  }
  if (have_day && (date.day < 1 || date.day > 31)) throw ParseFailure("day out of range");
  return date;
}

ProcessedColumns process_month(const Column& column) {
  ProcessedColumns out;
  Column dates{column.name, {}};
  dates.cells.reserve(column.size());
  for (std::size_t i = 0; i < column.size(); ++i) {
    const Cell& cell = column.cells[i];
    if (cell.is_missing()) {
      dates.cells.push_back(cell);
      continue;
    }
    try {
      dates.cells.push_back(Cell::integer(parse_month(cell.to_string()).yyyymmdd()));
    } catch (const ParseFailure& e) {
      dates.cells.push_back(Cell::missing());
      out.warnings.push_back(column.name + " row " + std::to_string(i) + ": " + e.what());
    }
  }
  out.outputs.push_back({std::move(dates), Directive::AlreadyNumeric});
  return out;
}

}  // namespace strclean
