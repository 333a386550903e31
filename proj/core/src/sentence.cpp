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

#include "strclean/error.hpp"
#include "strclean/processing.hpp"
#include "strclean/text.hpp"

namespace strclean {

namespace {

constexpr std::array<std::string_view, 10> kNounSuffixes = {"tion", "ment", "ness", "ity", "er",
                                                            "or",   "ism",  "ist",  "ma",  "s"};

std::unordered_set<std::string> token_set(const std::filesystem::path& path) {
  std::unordered_set<std::string> out;
  for (const auto& line : read_lines(path)) out.insert(to_lower(trim(line)));
  return out;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() > suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

NounFilter::NounFilter(std::unordered_set<std::string> nouns, std::unordered_set<std::string> stopwords)
    : nouns_(std::move(nouns)), stopwords_(std::move(stopwords)) {}

NounFilter NounFilter::load(const std::filesystem::path& nouns, const std::filesystem::path& stopwords) {
  return NounFilter(token_set(nouns), token_set(stopwords));
}

bool NounFilter::is_stopword(std::string_view token) const { return stopwords_.count(std::string(token)) > 0; }

bool NounFilter::is_noun(std::string_view token) const {
  if (is_stopword(token)) return false;
  if (nouns_.count(std::string(token))) return true;
  for (auto suffix : kNounSuffixes)
    if (ends_with(token, suffix)) return true;
  return false;
}

std::string NounFilter::reduce(std::string_view sentence, bool* fallback) const {
  const auto tokens = word_tokens(sentence);
  std::string out;
  for (const auto& t : tokens)
    if (is_noun(t)) {
      if (!out.empty()) out.push_back(' ');
      out += t;
    }
  if (fallback != nullptr) *fallback = out.empty();
  if (!out.empty()) return out;
  for (const auto& t : tokens)
    if (!is_stopword(t)) return t;
  return tokens.empty() ? std::string() : tokens.front();
}

ProcessedColumns process_sentence(const Column& column, const NounFilter& filter) {
  ProcessedColumns out;
  Column reduced{column.name, {}};
  reduced.cells.reserve(column.size());
  for (std::size_t i = 0; i < column.size(); ++i) {
    const Cell& cell = column.cells[i];
    if (cell.is_missing()) {
      reduced.cells.push_back(cell);
      continue;
    }
    bool fallback = false;
    std::string r = filter.reduce(cell.to_string(), &fallback);
    if (fallback)
      out.warnings.push_back(column.name + " row " + std::to_string(i) + ": no nouns found, kept '" + r + "'");
    reduced.cells.push_back(r.empty() ? cell : Cell::text(std::move(r)));
  }
  out.outputs.push_back({std::move(reduced), Directive::NominalEncode});
  return out;
}

}  // namespace strclean
