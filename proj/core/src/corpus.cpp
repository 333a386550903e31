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

#include "strclean/corpus.hpp"

#include <fstream>

#include "strclean/error.hpp"

namespace strclean {

namespace {

nlohmann::json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    nlohmann::json doc;
    in >> doc;
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(path.string() + " is not valid JSON: " + e.what());
  }
}

void write_json(const nlohmann::json& doc, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << doc.dump(1) << '\n';
}

void check_version(const nlohmann::json& doc) {
  if (!doc.is_object() || doc.value("version", 0) != 1) throw SchemaError("expected a version 1 document");
}

}  // namespace

Column LabeledColumn::to_column() const {
  Column c{name, {}};
  c.cells.reserve(values.size());
  for (const auto& v : values) c.cells.push_back(Cell::text(v));
  return c;
}

LabeledCorpus LabeledCorpus::from_json(const nlohmann::json& doc) {
  check_version(doc);
  LabeledCorpus corpus;
  try {
    for (const auto& c : doc.at("columns"))
      corpus.columns.push_back(
          {c.at("name").get<std::string>(), c.at("label").get<std::string>(), c.at("values").get<std::vector<std::string>>()});
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("malformed labeled corpus: ") + e.what());
  }
  return corpus;
}

LabeledCorpus LabeledCorpus::load(const std::filesystem::path& path) { return from_json(read_json(path)); }

nlohmann::json LabeledCorpus::to_json() const {
  nlohmann::json cols = nlohmann::json::array();
  for (const auto& c : columns) cols.push_back({{"name", c.name}, {"label", c.label}, {"values", c.values}});
  return {{"version", kVersion}, {"columns", std::move(cols)}};
}

void LabeledCorpus::save(const std::filesystem::path& path) const { write_json(to_json(), path); }

std::vector<LabeledFeatures> corpus_features(const LabeledCorpus& corpus, const EmbeddingStore& store,
                                             const KeywordConfig& keywords) {
  std::vector<LabeledFeatures> out;
  for (const auto& c : corpus.columns) {
    StatType label;
    if (c.label == "ordinal")
      label = StatType::Ordinal;
    else if (c.label == "nominal")
      label = StatType::Nominal;
    else
      throw SchemaError("column '" + c.name + "' has label '" + c.label + "', expected ordinal or nominal");
    out.push_back({extract_features(c.to_column(), c.name, store, keywords), label});
  }
  return out;
}

double LoocvResult::off_diagonal() const {
  const double total = static_cast<double>(confusion[0][0] + confusion[0][1] + confusion[1][0] + confusion[1][1]);
  return total == 0 ? 0.0 : static_cast<double>(confusion[0][1] + confusion[1][0]) / total;
}

LoocvResult loocv(const std::vector<LabeledFeatures>& dataset, const GbcHyperparams& params) {
  LoocvResult r;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    std::vector<LabeledFeatures> train;
    train.reserve(dataset.size() - 1);
    for (std::size_t j = 0; j < dataset.size(); ++j)
      if (j != i) train.push_back(dataset[j]);
    const GbcModel model = train_gbc(train, params);
    const auto predicted = predict_stat_type(model, dataset[i].features).label;
    ++r.confusion[dataset[i].label == StatType::Ordinal][predicted == StatType::Ordinal];
  }
  const double tp = static_cast<double>(r.confusion[1][1]);
  const double fp = static_cast<double>(r.confusion[0][1]);
  const double fn = static_cast<double>(r.confusion[1][0]);
  r.accuracy = dataset.empty() ? 0.0 : (tp + static_cast<double>(r.confusion[0][0])) / static_cast<double>(dataset.size());
  r.f1 = tp == 0 ? 0.0 : 2 * tp / (2 * tp + fp + fn);
  return r;
}

LikertSuite LikertSuite::from_json(const nlohmann::json& doc) {
  check_version(doc);
  LikertSuite suite;
  try {
    for (const auto& s : doc.at("scales"))
      suite.scales.push_back({s.at("name").get<std::string>(), s.at("order").get<std::vector<std::string>>(),
                              s.at("values").get<std::vector<std::string>>()});
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("malformed Likert suite: ") + e.what());
  }
  return suite;
}

LikertSuite LikertSuite::load(const std::filesystem::path& path) { return from_json(read_json(path)); }

nlohmann::json LikertSuite::to_json() const {
  nlohmann::json scales_json = nlohmann::json::array();
  for (const auto& s : scales) scales_json.push_back({{"name", s.name}, {"order", s.order}, {"values", s.values}});
  return {{"version", 1}, {"scales", std::move(scales_json)}};
}

void LikertSuite::save(const std::filesystem::path& path) const { write_json(to_json(), path); }

OrderingEvaluation evaluate_ordering(const LikertSuite& suite, const SentimentLexicon& lexicon) {
  OrderingEvaluation eval;
  for (const auto& scale : suite.scales) {
    Column column{scale.name, {}};
    for (const auto& v : scale.values) column.cells.push_back(Cell::text(v));
    ScaleScore s{scale.name, spearman_rank_correlation(ordinal_order(column, lexicon), scale.order),
                 spearman_rank_correlation(baseline_order(column), scale.order)};
    eval.mean_lexicon += s.lexicon;
    eval.mean_baseline += s.baseline;
    eval.scales.push_back(std::move(s));
  }
  if (!eval.scales.empty()) {
    eval.mean_lexicon /= static_cast<double>(eval.scales.size());
    eval.mean_baseline /= static_cast<double>(eval.scales.size());
  }
  return eval;
}

}  // namespace strclean
