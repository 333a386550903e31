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

#include "strclean/error.hpp"
#include "strclean/cleaning.hpp"
#include "strclean/text.hpp"

namespace strclean {

std::pair<Column, RepairLog> repair_type_outliers(const Column& column, const ColumnProfile& profile,
                                                  const Registry& registry) {
  Column out = column;
  RepairLog log;
  const MachineSpec* winner = registry.find(profile.winner);
  for (auto row : profile.anomaly_rows) {
    if (row >= out.cells.size()) continue;
    const Cell old = out.cells[row];
    if (old.is_missing()) continue;
    // A numeric cell is already the right kind for a numeric column.
    if (is_numeric_kind(profile.winner) && old.is_numeric()) continue;
    Cell repaired = Cell::missing();
    if (is_numeric_kind(profile.winner)) {
      if (old.is_text()) {
        const Cell parsed = parse_field(trim(old.as_text()), {});
        if (parsed.is_integer() || (parsed.is_number() && profile.winner == StringFeatureKind::BaseFloat))
          repaired = parsed;
      }
    } else if (old.is_numeric()) {
      const std::string text = old.to_string();
      if (winner != nullptr && winner->accepts(text)) repaired = Cell::text(text);
    }
    if (repaired == old) continue;
    out.cells[row] = repaired;
    log.entries.push_back({column.name, row, RepairAction::OutlierCoerced, old, repaired});
  }
  return {std::move(out), std::move(log)};
}

}  // namespace strclean
