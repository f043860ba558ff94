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

#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <fmt/format.h>

namespace persum::cli {

namespace {

nlohmann::ordered_json to_json(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return nullptr;
          return v;
        } else {
          return v;
        }
      },
      cell);
}

std::string to_text(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "";
        } else if constexpr (std::is_same_v<T, double>) {
          return format_number(v);
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else {
          return v;
        }
      },
      cell);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void render_json(const Report& r, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["command"] = r.command;
  doc["params"] = r.params;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < r.columns.size() && i < row.size(); ++i) {
      obj[r.columns[i]] = to_json(row[i]);
    }
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  doc["max_abs_err"] = to_json(r.max_abs_err);
  doc["max_rel_err"] = to_json(r.max_rel_err);
  doc["passed"] = r.passed;
  out << doc.dump(2) << '\n';
}

void render_csv(const Report& r, std::ostream& out) {
  for (std::size_t i = 0; i < r.columns.size(); ++i) {
    out << (i ? "," : "") << csv_escape(r.columns[i]);
  }
  out << '\n';
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << csv_escape(to_text(row[i]));
    }
    out << '\n';
  }
}

void render_text(const Report& r, std::ostream& out) {
  std::vector<std::size_t> width(r.columns.size());
  std::vector<std::vector<std::string>> cells;
  for (std::size_t i = 0; i < r.columns.size(); ++i) width[i] = r.columns[i].size();
  for (const auto& row : r.rows) {
    std::vector<std::string> texts;
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) {
      texts.push_back(to_text(row[i]));
      width[i] = std::max(width[i], texts.back().size());
    }
    cells.push_back(std::move(texts));
  }
  out << "# " << r.command;
  for (const auto& [key, value] : r.params.items()) {
    out << ' ' << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump());
  }
  out << '\n';
  auto line = [&](const std::vector<std::string>& texts) {
    std::string s;
    for (std::size_t i = 0; i < texts.size(); ++i) {
      if (i) s += "  ";
      s += fmt::format("{:>{}}", texts[i], width[i]);
    }
    out << s << '\n';
  };
  line(r.columns);
  for (const auto& texts : cells) line(texts);
  out << "max_abs_err=" << format_number(r.max_abs_err)
      << " max_rel_err=" << format_number(r.max_rel_err)
      << " passed=" << (r.passed ? "true" : "false") << '\n';
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  return std::nullopt;
}

Format format_for_path(std::string_view path) {
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() &&
           path.substr(path.size() - suffix.size()) == suffix;
  };
  if (ends_with(".json")) return Format::Json;
  if (ends_with(".csv")) return Format::Csv;
  return Format::Text;
}

void Report::note_error(double abs_err, double rel_err) {
  auto bump = [](double& slot, double v) {
    if (std::isnan(v)) v = INFINITY;
    slot = std::max(slot, v);
  };
  bump(max_abs_err, abs_err);
  bump(max_rel_err, rel_err);
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return fmt::format("{:.15g}", value);
}

void render(const Report& report, Format format, std::ostream& out) {
  switch (format) {
    case Format::Json:
      render_json(report, out);
      break;
    case Format::Csv:
      render_csv(report, out);
      break;
    case Format::Text:
      render_text(report, out);
      break;
  }
}

}  // namespace persum::cli
