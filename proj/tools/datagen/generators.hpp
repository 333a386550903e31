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

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "strclean/corpus.hpp"
#include "strclean/table.hpp"

namespace strclean::datagen {

struct GeoRow {
  std::string country;
  std::string postal_code;
  double latitude = 0;
  double longitude = 0;
  /// Outward-level rows ("SW1A", "1012") rather than full codes.
  bool outward = false;
};

std::vector<GeoRow> geo_rows();
std::string geo_tsv(const std::vector<GeoRow>& rows);

/// Columns labeled with the kind name they were generated as.
LabeledCorpus inference_corpus();

/// Ordinal and nominal categorical columns: Likert-style scales against
/// named entities, or with `mixed` also coded ordinal attributes and short
/// descriptive nominal ones.
LabeledCorpus stattype_corpus(bool mixed);

LikertSuite likert_suite();

struct Fixture {
  Table table;
  /// Planted typos, anomalies and the intended kind per column.
  nlohmann::json manifest;
};

Fixture e2e_fixture(const std::vector<GeoRow>& geo);

}  // namespace strclean::datagen
