// Copyright 2026 The vsmgrade Authors
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

// Minimal RFC-4180 reader/writer. Accepts LF and CRLF line endings, quoted
// fields with embedded separators, quotes ("") and newlines, and an optional
// UTF-8 byte-order mark. Blank lines are skipped.

#ifndef VSMGRADE_CSV_HPP
#define VSMGRADE_CSV_HPP

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "vsmgrade/error.hpp"

namespace vsmgrade::csv {

using Row = std::vector<std::string>;

struct Table {
  Row header;
  std::vector<Row> rows;
  std::vector<std::size_t> lines;  // 1-based source line of each row
};

inline std::string read_file(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw Error(ErrorKind::MissingFile, "cannot open '" + path.string() + "'");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::MissingFile, "cannot open '" + path.string() + "'");
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::vector<Row> parse_rows(std::string_view text, std::string_view source,
                                   std::vector<std::size_t>* lines = nullptr) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::vector<Row> rows;
  Row row;
  std::string field;
  bool in_quotes = false;
  bool after_quote = false;   // closing quote seen, expecting separator
  bool row_has_data = false;  // distinguishes a blank line from a row of one empty field
  std::size_t line = 1;
  std::size_t row_line = 1;

  auto malformed = [&](const std::string& why) {
    return Error(ErrorKind::MalformedCsv,
                 std::string(source) + ":" + std::to_string(line) + ": " + why);
  };
  auto end_row = [&] {
    if (row_has_data) {
      row.push_back(std::move(field));
      rows.push_back(std::move(row));
      if (lines != nullptr) lines->push_back(row_line);
    }
    row.clear();
    field.clear();
    row_has_data = false;
    after_quote = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
          after_quote = true;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    if (!row_has_data) row_line = line;
    switch (c) {
      case ',':
        row.push_back(std::move(field));
        field.clear();
        row_has_data = true;
        after_quote = false;
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') break;
        throw malformed("bare carriage return");
      case '\n':
        end_row();
        ++line;
        break;
      case '"':
        if (after_quote || !field.empty()) throw malformed("unexpected quote inside field");
        in_quotes = true;
        row_has_data = true;
        break;
      default:
        if (after_quote) throw malformed("characters after closing quote");
        field.push_back(c);
        row_has_data = true;
        break;
    }
  }
  if (in_quotes) throw malformed("unbalanced quotes");
  end_row();
  return rows;
}

/// Parses a file whose first row must equal `expected_header` exactly; every
/// data row must have the header's width.
inline Table read_table(const std::filesystem::path& path, const Row& expected_header) {
  const std::string text = read_file(path);
  const std::string source = path.string();
  Table table;
  std::vector<Row> rows = parse_rows(text, source, &table.lines);
  auto join = [](const Row& r) {
    std::string out;
    for (std::size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + r[i];
    return out;
  };
  if (rows.empty() || rows.front() != expected_header) {
    throw Error(ErrorKind::MalformedCsv, source + ": expected header '" + join(expected_header) +
                                             "'" + (rows.empty() ? "" : ", got '" + join(rows.front()) + "'"));
  }
  table.header = std::move(rows.front());
  table.lines.erase(table.lines.begin());
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size() != table.header.size()) {
      throw Error(ErrorKind::MalformedCsv,
                  source + ":" + std::to_string(table.lines[i - 1]) + ": expected " +
                      std::to_string(table.header.size()) + " fields, got " +
                      std::to_string(rows[i].size()));
    }
    table.rows.push_back(std::move(rows[i]));
  }
  return table;
}

inline std::string quote(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

inline void write_row(std::ostream& out, const Row& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out << ',';
    out << quote(row[i]);
  }
  out << '\n';
}

inline std::string to_string(const Row& header, const std::vector<Row>& rows) {
  std::ostringstream out;
  write_row(out, header);
  for (const Row& row : rows) write_row(out, row);
  return out.str();
}

inline void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::MissingFile, "cannot write '" + path.string() + "'");
  out << contents;
  if (!out) throw Error(ErrorKind::MissingFile, "failed writing '" + path.string() + "'");
}

}  // namespace vsmgrade::csv

#endif  // VSMGRADE_CSV_HPP
