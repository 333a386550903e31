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

#include "strclean/pipeline.hpp"

namespace strclean {

nlohmann::json ColumnReport::to_json() const {
  nlohmann::json outs = nlohmann::json::array();
  for (const auto& o : outputs) {
    nlohmann::json e = {{"name", o.name}, {"directive", directive_name(o.directive)}};
    e["encoder"] = o.encoder ? nlohmann::json(encoder_name(*o.encoder)) : nlohmann::json(nullptr);
    outs.push_back(std::move(e));
  }
  nlohmann::json j = {{"name", name},
                      {"status", status},
                      {"profile", profile.to_json()},
                      {"final_kind", kind_name(final_kind)},
                      {"outputs", std::move(outs)},
                      {"warnings", warnings}};
  j["reinferred"] = reinferred ? reinferred->to_json() : nlohmann::json(nullptr);
  j["features"] = features ? features->to_json() : nlohmann::json(nullptr);
  if (stat_type)
    j["stat_type"] = {{"label", stat_type_name(stat_type->label)}, {"probability", stat_type->probability}};
  else
    j["stat_type"] = nullptr;
  return j;
}

std::size_t RunReport::string_columns() const {
  std::size_t n = 0;
  for (const auto& c : columns)
    if (!is_numeric_kind(c.profile.winner)) ++n;
  return n;
}

nlohmann::json RunReport::to_json() const {
  nlohmann::json cols = nlohmann::json::array();
  for (const auto& c : columns) cols.push_back(c.to_json());
  nlohmann::json timings = nlohmann::json::object();
  for (const auto& [stage, ms] : timings_ms) timings[stage] = ms;
  return {{"schema", "strclean-run-report"},
          {"version", kVersion},
          {"n_rows", n_rows},
          {"n_columns", columns.size()},
          {"seed", seed},
          {"string_columns", string_columns()},
          {"missingness", missingness.to_json()},
          {"columns", std::move(cols)},
          {"repairs", repairs.to_json()},
          {"repair_counts",
           {{"Imputed", repairs.count(RepairAction::Imputed)},
            {"TypoFixed", repairs.count(RepairAction::TypoFixed)},
            {"OutlierCoerced", repairs.count(RepairAction::OutlierCoerced)}}},
          {"timings_ms", std::move(timings)},
          {"warnings", warnings}};
}

}  // namespace strclean
