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

#include <cstdlib>
#include <fstream>
#include <set>

#include "strclean/error.hpp"
#include "strclean/pipeline.hpp"
#include "strclean/text.hpp"

namespace strclean {

namespace {

using nlohmann::json;

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key)) throw ConfigError("unknown key '" + key + "' in " + where);
}

template <typename T>
void read(const json& obj, const char* key, T& out) {
  if (obj.contains(key)) out = obj.at(key).get<T>();
}

void read_path(const json& obj, const char* key, std::filesystem::path& out) {
  if (obj.contains(key)) out = obj.at(key).get<std::string>();
}


}  // namespace

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("STRCLEAN_DATA_DIR"); env != nullptr && *env != '\0') return env;
  const std::filesystem::path build_dir = STRCLEAN_BUILD_DATA_DIR;
  std::error_code ec;
  if (std::filesystem::is_directory(build_dir, ec)) return build_dir;
  return STRCLEAN_INSTALL_DATA_DIR;
}

void DataPaths::resolve() {
  if (data_dir.empty()) data_dir = default_data_dir();
  auto fill = [&](std::filesystem::path& p, const char* relative) {
    if (p.empty()) p = data_dir / relative;
  };
  fill(geo_table, "geo/postal_codes.tsv");
  fill(lexicon, "lexicon/sentiment.tsv");
  fill(nouns, "lexicon/nouns.txt");
  fill(stopwords, "lexicon/stopwords.txt");
  fill(keywords_dir, "keywords");
  fill(model, "models/stattype_gbc.json");
  // Embeddings and machine overrides are opt-in; a conventional file is used if present.
  std::error_code ec;
  if (embeddings.empty() && std::filesystem::exists(data_dir / "embeddings/vectors.txt", ec))
    embeddings = data_dir / "embeddings/vectors.txt";
}

json DataPaths::to_json() const {
  return {{"data_dir", data_dir.string()},   {"embeddings", embeddings.string()}, {"geo_table", geo_table.string()},
          {"lexicon", lexicon.string()},     {"nouns", nouns.string()},           {"stopwords", stopwords.string()},
          {"keywords_dir", keywords_dir.string()}, {"model", model.string()},     {"machines", machines.string()}};
}

PipelineConfig PipelineConfig::from_json(const json& doc) {
  PipelineConfig c;
  try {
    check_keys(doc,
               {"delimiter", "missing_tokens", "machines", "p_anomaly", "numeric_majority", "sample_limit", "alpha",
                "typo", "impute", "encoders", "gamma_poisson", "minhash", "seed", "encode", "threads", "target",
                "paths"},
               "config");
    if (doc.contains("delimiter")) {
      const auto d = doc.at("delimiter").get<std::string>();
      if (d.size() != 1 || d == "\"" || d == "\n" || d == "\r") throw ConfigError("delimiter must be one character");
      c.delimiter = d[0];
    }
    read(doc, "missing_tokens", c.missing_tokens);
    if (doc.contains("machines")) c.machines = MachineToggles::from_json(doc.at("machines"));
    read(doc, "p_anomaly", c.inference.p_anomaly);
    read(doc, "numeric_majority", c.inference.numeric_majority);
    read(doc, "sample_limit", c.inference.sample_limit);
    read(doc, "alpha", c.alpha);
    if (doc.contains("typo")) {
      const auto& t = doc.at("typo");
      check_keys(t, {"min_support", "max_dist"}, "typo");
      read(t, "min_support", c.typos.min_support);
      read(t, "max_dist", c.typos.max_dist);
    }
    if (doc.contains("impute")) {
      const auto& t = doc.at("impute");
      check_keys(t, {"sweeps", "neighbors"}, "impute");
      read(t, "sweeps", c.impute.sweeps);
      read(t, "neighbors", c.impute.neighbors);
    }
    if (doc.contains("encoders")) {
      const auto& e = doc.at("encoders");
      if (!e.is_object()) throw ConfigError("encoders must map column names to encoder names");
      for (const auto& [column, name] : e.items()) c.encoder_overrides[column] = parse_encoder(name.get<std::string>());
    }
    if (doc.contains("gamma_poisson")) {
      const auto& g = doc.at("gamma_poisson");
      check_keys(g, {"dim", "iterations"}, "gamma_poisson");
      read(g, "dim", c.gamma_poisson_dim);
      read(g, "iterations", c.gamma_poisson_iterations);
    }
    if (doc.contains("minhash")) {
      const auto& m = doc.at("minhash");
      check_keys(m, {"k"}, "minhash");
      read(m, "k", c.minhash_k);
    }
    read(doc, "seed", c.seed);
    read(doc, "encode", c.encode);
    read(doc, "threads", c.threads);
    if (doc.contains("target")) {
      const auto& t = doc.at("target");
      check_keys(t, {"column", "smoothing"}, "target");
      read(t, "column", c.target_column);
      read(t, "smoothing", c.target_smoothing);
    }
    if (doc.contains("paths")) {
      const auto& p = doc.at("paths");
      check_keys(p,
                 {"data_dir", "embeddings", "geo_table", "lexicon", "nouns", "stopwords", "keywords_dir", "model",
                  "machines"},
                 "paths");
      read_path(p, "data_dir", c.paths.data_dir);
      read_path(p, "embeddings", c.paths.embeddings);
      read_path(p, "geo_table", c.paths.geo_table);
      read_path(p, "lexicon", c.paths.lexicon);
      read_path(p, "nouns", c.paths.nouns);
      read_path(p, "stopwords", c.paths.stopwords);
      read_path(p, "keywords_dir", c.paths.keywords_dir);
      read_path(p, "model", c.paths.model);
      read_path(p, "machines", c.paths.machines);
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  } catch (const InvalidSpec& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (!(c.alpha > 0 && c.alpha < 1)) throw ConfigError("alpha must lie in (0,1)");
  if (!(c.inference.p_anomaly > 0 && c.inference.p_anomaly < 1)) throw ConfigError("p_anomaly must lie in (0,1)");
  if (c.gamma_poisson_dim == 0 || c.minhash_k == 0) throw ConfigError("encoder dimensions must be positive");
  return c;
}

PipelineConfig PipelineConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ConfigError("config " + path.string() + " is not valid JSON: " + e.what());
  }
  return from_json(doc);
}

json PipelineConfig::to_json() const {
  json machines_json = json::object();
  for (auto kind : kFeatureKinds) machines_json[std::string(kind_name(kind))] = machines.is_enabled(kind);
  json encoders = json::object();
  for (const auto& [column, id] : encoder_overrides) encoders[column] = encoder_name(id);
  return {{"delimiter", std::string(1, delimiter)},
          {"missing_tokens", missing_tokens},
          {"machines", machines_json},
          {"p_anomaly", inference.p_anomaly},
          {"numeric_majority", inference.numeric_majority},
          {"sample_limit", inference.sample_limit},
          {"alpha", alpha},
          {"typo", {{"min_support", typos.min_support}, {"max_dist", typos.max_dist}}},
          {"impute", {{"sweeps", impute.sweeps}, {"neighbors", impute.neighbors}}},
          {"encoders", encoders},
          {"gamma_poisson", {{"dim", gamma_poisson_dim}, {"iterations", gamma_poisson_iterations}}},
          {"minhash", {{"k", minhash_k}}},
          {"seed", seed},
          {"encode", encode},
          {"threads", threads},
          {"target", {{"column", target_column}, {"smoothing", target_smoothing}}},
          {"paths", paths.to_json()}};
}

Resources Resources::load(const PipelineConfig& config) {
  Resources r;
  DataPaths paths = config.paths;
  paths.resolve();
  auto warn = [&](const std::string& what, const std::exception& e) {
    r.warnings.push_back(what + " unavailable: " + e.what());
  };

  r.registry = build_registry(config.machines);
  if (!paths.machines.empty()) {
    std::ifstream in(paths.machines);
    if (!in) throw ConfigError("cannot open machine file " + paths.machines.string());
    try {
      json doc;
      in >> doc;
      // {"machines": [...]} with any subset of machines; each replaces the built-in one.
      for (const auto& jm : doc.at("machines")) {
        MachineSpec m = MachineSpec::from_json(jm);
        if (is_feature_kind(m.kind()) && !config.machines.is_enabled(m.kind())) continue;
        r.registry.replace(std::move(m));
      }
    } catch (const json::exception& e) {
      throw ConfigError("machine file: " + std::string(e.what()));
    } catch (const InvalidSpec& e) {
      throw ConfigError("machine file: " + std::string(e.what()));
    }
  }

  try {
    r.geo = load_geo_table(paths.geo_table);
  } catch (const Error& e) {
    warn("geo table", e);
  }
  try {
    r.nouns = NounFilter::load(paths.nouns, paths.stopwords);
  } catch (const Error& e) {
    warn("noun lexicon", e);
  }
  try {
    r.lexicon = SentimentLexicon::load(paths.lexicon);
  } catch (const Error& e) {
    warn("sentiment lexicon", e);
  }
  if (!paths.embeddings.empty()) {
    try {
      r.embeddings = EmbeddingStore::load(paths.embeddings);
    } catch (const Error& e) {
      warn("embeddings", e);
    }
  }
  try {
    r.keywords = KeywordConfig::load(paths.keywords_dir);
  } catch (const Error& e) {
    warn("keyword lists", e);
  }
  try {
    r.model = load_model(paths.model);
  } catch (const Error& e) {
    warn("statistical-type model", e);
  }
  return r;
}

}  // namespace strclean
