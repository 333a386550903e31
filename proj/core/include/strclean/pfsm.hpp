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

#include <array>
#include <bitset>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "strclean/table.hpp"

namespace strclean {

/// Closed set of column kinds. Declaration order is the registry order and
/// breaks posterior ties.
enum class StringFeatureKind : int {
  Coordinate,
  Day,
  Email,
  Filepath,
  Month,
  NumericalString,
  Sentence,
  Url,
  ZipCode,
  Standard,
  BaseInteger,
  BaseFloat,
  MissingType,
  AnomalyType,
};

inline constexpr std::array<StringFeatureKind, 9> kFeatureKinds = {
    StringFeatureKind::Coordinate, StringFeatureKind::Day,      StringFeatureKind::Email,
    StringFeatureKind::Filepath,   StringFeatureKind::Month,    StringFeatureKind::NumericalString,
    StringFeatureKind::Sentence,   StringFeatureKind::Url,      StringFeatureKind::ZipCode,
};

/// Kinds that carry posterior mass.
inline constexpr std::array<StringFeatureKind, 12> kCandidateKinds = {
    StringFeatureKind::Coordinate, StringFeatureKind::Day,      StringFeatureKind::Email,
    StringFeatureKind::Filepath,   StringFeatureKind::Month,    StringFeatureKind::NumericalString,
    StringFeatureKind::Sentence,   StringFeatureKind::Url,      StringFeatureKind::ZipCode,
    StringFeatureKind::Standard,   StringFeatureKind::BaseInteger, StringFeatureKind::BaseFloat,
};

std::string_view kind_name(StringFeatureKind kind);
std::optional<StringFeatureKind> parse_kind(std::string_view name);
bool is_feature_kind(StringFeatureKind kind);
bool is_numeric_kind(StringFeatureKind kind);

/// Machines read symbols, not bytes: the 95 printable ASCII characters
/// plus one OTHER symbol standing for every other code point.
namespace alphabet {
inline constexpr int kSize = 96;
inline constexpr int kOther = 95;

int symbol_of(char32_t code_point);
std::vector<int> symbolize(std::string_view utf8, bool fold_case);
std::size_t length(std::string_view utf8);
}  // namespace alphabet

using SymbolSet = std::bitset<alphabet::kSize>;

/// `weight` is the total emission mass of the edge, spread uniformly over
/// its symbols.
struct MachineTransition {
  std::size_t target = 0;
  SymbolSet symbols;
  double weight = 0.0;
};

struct MachineState {
  bool accepting = false;
  std::vector<MachineTransition> transitions;
};

/// A deterministic probabilistic finite-state machine. State 0 is the
/// start state. Outgoing weights of every non-terminal state sum to one.
class MachineSpec {
 public:
  /// Compiles an anchored pattern over the symbol alphabet. Supported
  /// syntax: literals, `.`, classes `[a-z]`/`[^...]`, groups, `|`,
  /// `* + ? {m} {m,} {m,n}`, and the escapes `\d \w \s \o` (\o = OTHER).
  /// Emission weights are uniform over the legal symbols of each state.
  static MachineSpec compile(StringFeatureKind kind, std::string pattern, bool case_sensitive);

  /// Validates a hand-written graph. Throws InvalidSpec.
  static MachineSpec from_graph(StringFeatureKind kind, std::string pattern, bool case_sensitive,
                                std::vector<MachineState> states);

  static MachineSpec from_json(const nlohmann::json& doc);
  nlohmann::json to_json() const;

  StringFeatureKind kind() const { return kind_; }
  const std::string& pattern() const { return pattern_; }
  bool case_sensitive() const { return case_sensitive_; }
  const std::vector<MachineState>& states() const { return states_; }

  /// Sum of log emission weights along the accepting path, or -inf.
  double logprob(std::string_view value) const;
  bool accepts(std::string_view value) const;

 private:
  MachineSpec() = default;
  void build_tables();

  StringFeatureKind kind_ = StringFeatureKind::Standard;
  std::string pattern_;
  bool case_sensitive_ = true;
  std::vector<MachineState> states_;
  std::vector<std::int32_t> next_;
  std::vector<double> log_emission_;
};

double value_logprob(const MachineSpec& machine, std::string_view value);

/// Enables or disables the nine feature machines. The four base machines
/// are always present.
struct MachineToggles {
  std::map<StringFeatureKind, bool> enabled;

  bool is_enabled(StringFeatureKind kind) const;
  MachineToggles& disable(StringFeatureKind kind);
  static MachineToggles from_json(const nlohmann::json& doc);
};

std::string_view default_pattern(StringFeatureKind kind);
bool default_case_sensitive(StringFeatureKind kind);

class Registry {
 public:
  explicit Registry(std::vector<MachineSpec> machines);

  const std::vector<MachineSpec>& machines() const { return machines_; }
  std::size_t size() const { return machines_.size(); }
  const MachineSpec* find(StringFeatureKind kind) const;
  /// Substitutes the machine of the same kind (e.g. loaded from JSON).
  void replace(MachineSpec machine);

  nlohmann::json to_json() const;
  static Registry from_json(const nlohmann::json& doc);

 private:
  std::vector<MachineSpec> machines_;
};

/// The nine feature machines (minus disabled ones) followed by
/// BaseInteger, BaseFloat, MissingType and AnomalyType.
Registry build_registry(const MachineToggles& toggles = {});

struct InferenceOptions {
  double p_anomaly = 0.01;
  /// Fraction of non-missing cells that must be numeric for a base numeric kind.
  double numeric_majority = 0.95;
  /// Rows scored for the posterior; the anomaly scan always covers every row.
  std::size_t sample_limit = 10000;
  std::uint64_t seed = 0;
};

/// Length-calibrated noise model: (1/96)^len in log space.
double uniform_anomaly_logprob(std::string_view value);

struct ColumnProfile {
  std::string column_name;
  std::map<StringFeatureKind, double> posterior;
  StringFeatureKind winner = StringFeatureKind::Standard;
  std::vector<std::size_t> anomaly_rows;
  std::vector<std::size_t> missing_rows;

  nlohmann::json to_json() const;
};

/// Text form a cell is scored under (numbers in canonical notation).
std::string scoring_text(const Cell& cell);

/// Throws EmptyColumn if the column has no scorable cells.
ColumnProfile infer_column(const Column& column, const Registry& registry,
                           const InferenceOptions& options = {});

std::vector<std::size_t> detect_outlier_rows(const ColumnProfile& profile, const Column& column);

}  // namespace strclean
