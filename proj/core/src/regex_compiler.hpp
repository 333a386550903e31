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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "strclean/pfsm.hpp"

namespace strclean::detail {

/// Deterministic automaton over the symbol alphabet; -1 marks rejection.
/// Every state can reach an accepting state.
struct Dfa {
  std::vector<bool> accepting;
  std::vector<std::array<std::int32_t, alphabet::kSize>> next;
};

/// Throws InvalidSpec on syntax errors or an empty language.
Dfa compile_pattern(std::string_view pattern, bool case_sensitive);

/// Class-body notation used in machine JSON ("a-z0-9\\o").
std::string symbols_to_class(const SymbolSet& set);
SymbolSet class_to_symbols(std::string_view body);

}  // namespace strclean::detail
