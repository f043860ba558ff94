// Copyright 2026 The persum Authors.
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

#ifndef PERSUM_TOOLS_REPORT_HPP
#define PERSUM_TOOLS_REPORT_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

namespace persum::cli {

enum class Format { Text, Csv, Json };

std::optional<Format> parse_format(std::string_view name);

/// Format implied by an output path: .json, .csv, anything else is text.
Format format_for_path(std::string_view path);

/// Empty cells render as null / blank.
using Cell = std::variant<std::monostate, double, std::int64_t, std::string, bool>;

/// Tabular result of one command. Rendering is deterministic: column order
/// is fixed by `columns`, numbers use a fixed format per output kind.
struct Report {
  std::string command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  double max_abs_err = 0.0;
  double max_rel_err = 0.0;
  bool passed = true;

  void add_row(std::vector<Cell> row) { rows.push_back(std::move(row)); }
  void note_error(double abs_err, double rel_err);
};

/// JSON uses the shortest round-trip representation of doubles, CSV and text
/// use 15 significant digits.
void render(const Report& report, Format format, std::ostream& out);

std::string format_number(double value);

}  // namespace persum::cli

#endif  // PERSUM_TOOLS_REPORT_HPP
