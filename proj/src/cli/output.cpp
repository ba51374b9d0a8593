// Copyright 2026 The Tribraid Authors
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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "tribraid/cli.hpp"

namespace tribraid::cli {

namespace {

std::string csv_text(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string json_text(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

std::string cell_text(const Cell& cell, OutputFormat format) {
  if (const auto* x = std::get_if<double>(&cell)) {
    if (format == OutputFormat::json && !std::isfinite(*x)) return "null";
    return format_number(*x);
  }
  const auto& s = std::get<std::string>(cell);
  return format == OutputFormat::csv ? csv_text(s) : json_text(s);
}

}  // namespace

std::string format_number(double x) {
  // 12 significant digits; -0 prints as 0 so equal tables stay byte-equal.
  if (x == 0.0) x = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.11e", x);
  return buf;
}

std::string render(const ResultTable& table, OutputFormat format) {
  std::string out;
  if (format == OutputFormat::csv) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      out += (c ? "," : "") + csv_text(table.columns[c]);
    }
    out += '\n';
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        out += (c ? "," : "") + cell_text(row[c], format);
      }
      out += '\n';
    }
    return out;
  }
  out += "{\n  \"columns\": [";
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out += (c ? ", " : "") + json_text(table.columns[c]);
  }
  out += "],\n  \"rows\": [";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out += r ? ",\n    [" : "\n    [";
    const auto& row = table.rows[r];
    for (std::size_t c = 0; c < row.size(); ++c) {
      out += (c ? ", " : "") + cell_text(row[c], format);
    }
    out += ']';
  }
  out += table.rows.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

void write_output(const ResultTable& table, OutputFormat format,
                  const std::string& path) {
  const std::string text = render(table, format);
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw Error(ErrorCode::IoError, "writing to stdout failed");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  out << text;
  out.close();
  if (!out) throw Error(ErrorCode::IoError, "writing '" + path + "' failed");
}

}  // namespace tribraid::cli
