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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "strclean/pfsm.hpp"
#include "strclean/table.hpp"

namespace strclean {

enum class Mechanism { MCAR, MAR, MNAR };

std::string_view mechanism_name(Mechanism m);

struct MissingnessDiagnosis {
  Mechanism mechanism = Mechanism::MCAR;
  double statistic = 0.0;
  int dof = 0;
  double p_value = 1.0;
  /// Degenerate-input events (no numeric columns, ridge added, ...).
  std::vector<std::string> notes;

  nlohmann::json to_json() const;
};

/// Upper tail of the chi-square distribution; 1 for dof == 0.
double chi_square_sf(double x, double dof);

/// Little's MCAR test over the numeric columns (every observed cell
/// Integer or Number). Patterns are compared against available-case means
/// using the pairwise-complete covariance. When p <= alpha the mechanism
/// is MAR if some missingness indicator has |point-biserial r| > 0.2 with
/// another observed numeric column, else MNAR.
MissingnessDiagnosis littles_test(const Table& table, double alpha = 0.05);

enum class RepairAction { Imputed, TypoFixed, OutlierCoerced };

std::string_view action_name(RepairAction a);

struct RepairEntry {
  std::string column;
  std::size_t row = 0;
  RepairAction action = RepairAction::Imputed;
  Cell old_value;
  Cell new_value;
};

struct RepairLog {
  std::vector<RepairEntry> entries;

  /// Appends `other`. A cell already present keeps its first action and
  /// original value and takes the newer value, so every cell appears once.
  void merge(const RepairLog& other);
  std::size_t count(RepairAction action) const;
  nlohmann::json to_json() const;
};

struct ImputeOptions {
  int sweeps = 5;
  /// Neighbours voting on a text cell under conditional imputation.
  std::size_t neighbors = 5;
};

struct ImputeResult {
  Table table;
  RepairLog log;
  std::vector<std::string> dropped_columns;
};

/// MCAR: column mean / mode. MAR and MNAR: round-robin conditional
/// imputation seeded by mean / mode. All-missing columns are dropped.
ImputeResult impute(const Table& table, const MissingnessDiagnosis& diagnosis, const ImputeOptions& options = {});

std::size_t levenshtein(std::string_view a, std::string_view b);

struct TypoOptions {
  /// Required ratio count(frequent) / count(rare).
  double min_support = 10.0;
  std::size_t max_dist = 2;
};

/// Rewrites rare text values to their unique nearest dominant neighbour,
/// repeating until nothing changes.
std::pair<Column, RepairLog> correct_typos(const Column& column, const TypoOptions& options = {});

/// Coerces anomaly cells to the winning kind when lossless, otherwise
/// blanks them for imputation.
std::pair<Column, RepairLog> repair_type_outliers(const Column& column, const ColumnProfile& profile,
                                                  const Registry& registry);

}  // namespace strclean
