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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace strclean {

std::string to_lower(std::string_view s);
std::string to_upper(std::string_view s);
std::string_view trim(std::string_view s);

/// Splits on runs of ASCII whitespace.
std::vector<std::string> split_whitespace(std::string_view s);
/// Lowercased runs of ASCII letters, digits and apostrophes.
std::vector<std::string> word_tokens(std::string_view s);

/// Non-empty lines with trailing whitespace removed; lines starting with
/// '#' are comments. Throws IoError when the file cannot be opened.
std::vector<std::string> read_lines(const std::filesystem::path& path);

/// Replaces invalid UTF-8 sequences by U+FFFD. Returns true if anything changed.
bool repair_utf8(std::string& s);

/// Shortest round-trip decimal form of a double ("1.5", "2", "1e+20").
std::string format_double(double d);

}  // namespace strclean
