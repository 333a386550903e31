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

#include <cmath>
#include <fstream>
#include <string>

#include "strclean/encoders.hpp"
#include "strclean/error.hpp"
#include "strclean/text.hpp"

namespace strclean {

namespace {

constexpr std::size_t kModifierWindow = 2;

double parse_number(const std::string& field, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const double v = std::stod(field, &used);
    if (used != field.size() || !std::isfinite(v)) throw std::invalid_argument(field);
    return v;
  } catch (const std::exception&) {
    throw SchemaError("lexicon line " + std::to_string(line_no) + ": bad number '" + field + "'");
  }
}

}  // namespace

void SentimentLexicon::set_score(std::string token, double score) {
  if (!(score >= -4.0 && score <= 4.0)) throw SchemaError("intensity for '" + token + "' outside [-4,4]");
  scores_[to_lower(token)] = score;
}

void SentimentLexicon::set_booster(std::string token, double factor) {
  if (!(factor > 0)) throw SchemaError("booster factor for '" + token + "' must be positive");
  boosters_[to_lower(token)] = factor;
}

void SentimentLexicon::add_negator(std::string token) { negators_.insert(to_lower(token)); }

const double* SentimentLexicon::score(std::string_view token) const {
  auto it = scores_.find(std::string(token));
  return it == scores_.end() ? nullptr : &it->second;
}

const double* SentimentLexicon::booster(std::string_view token) const {
  auto it = boosters_.find(std::string(token));
  return it == boosters_.end() ? nullptr : &it->second;
}

bool SentimentLexicon::is_negator(std::string_view token) const { return negators_.count(std::string(token)) > 0; }

SentimentLexicon SentimentLexicon::parse(std::istream& in) {
  enum class Section { Scores, Boosters, Negators } section = Section::Scores;
  SentimentLexicon lexicon;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (t == "[scores]") {
      section = Section::Scores;
      continue;
    }
    if (t == "[boosters]") {
      section = Section::Boosters;
      continue;
    }
    if (t == "[negators]") {
      section = Section::Negators;
      continue;
    }
    const auto fields = split_whitespace(t);
    if (section == Section::Negators) {
      if (fields.size() != 1) throw SchemaError("lexicon line " + std::to_string(line_no) + ": expected one token");
      lexicon.add_negator(fields[0]);
      continue;
    }
    if (fields.size() != 2)
      throw SchemaError("lexicon line " + std::to_string(line_no) + ": expected token and number");
    const double v = parse_number(fields[1], line_no);
    if (section == Section::Scores)
      lexicon.set_score(fields[0], v);
    else
      lexicon.set_booster(fields[0], v);
  }
  if (lexicon.size() == 0) throw SchemaError("lexicon has no scored tokens");
  return lexicon;
}

SentimentLexicon SentimentLexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open lexicon " + path.string());
  return parse(in);
}

double sentiment_intensity(std::string_view s, const SentimentLexicon& lexicon) {
  const auto tokens = word_tokens(s);
  double total = 0.0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const double* base = lexicon.score(tokens[i]);
    if (base == nullptr) continue;
    double v = *base;
    for (std::size_t back = 1; back <= kModifierWindow && back <= i; ++back) {
      const std::string& prev = tokens[i - back];
      if (const double* factor = lexicon.booster(prev)) v *= *factor;
      if (lexicon.is_negator(prev)) v = -v;
    }
    total += v;
  }
  return total;
}

}  // namespace strclean
