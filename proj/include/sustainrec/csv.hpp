/*
 * Copyright 2026 The sustainrec Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace sustainrec {

/// Failure to read or write a file at all.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A cell that cannot be parsed as its declared type, a missing column,
/// or a malformed record. Carries file/line diagnostics.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string file, std::size_t line, const std::string& msg)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + msg),
        file_(std::move(file)),
        line_(line) {}

  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

namespace csv {

struct Row {
  std::size_t line = 0;  // 1-based line of the record start
  std::vector<std::string> cells;
};

struct Table {
  std::string path;
  std::vector<std::string> header;
  std::vector<Row> rows;

  // Column index by name; SchemaError if absent.
  std::size_t column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return i;
    throw SchemaError(path, 1, "missing column '" + name + "'");
  }

  bool has_column(const std::string& name) const {
    for (const auto& h : header)
      if (h == name) return true;
    return false;
  }

  const std::string& cell(const Row& row, std::size_t col) const {
    static const std::string empty;
    return col < row.cells.size() ? row.cells[col] : empty;
  }
};

// RFC-4180-style parse: quoted cells may contain commas, escaped quotes
// ("") and newlines. CRLF and a missing trailing newline are accepted.
inline Table parse(const std::string& text, std::string path) {
  Table table;
  table.path = std::move(path);

  std::vector<std::string> record;
  std::string cell;
  bool in_quotes = false;
  bool row_started = false;
  std::size_t line = 1;
  std::size_t record_line = 1;

  auto end_cell = [&] {
    record.push_back(cell);
    cell.clear();
  };
  auto end_record = [&] {
    end_cell();
    if (table.header.empty()) {
      table.header = record;
    } else {
      bool blank = record.size() == 1 && record[0].empty();
      if (!blank) table.rows.push_back(Row{record_line, record});
    }
    record.clear();
    row_started = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (!row_started) {
      record_line = line;
      row_started = true;
    }
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          cell.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        cell.push_back(c);
      }
    } else if (c == '"') {
      in_quotes = true;
    } else if (c == ',') {
      end_cell();
    } else if (c == '\r') {
      // swallowed; the matching '\n' ends the record
    } else if (c == '\n') {
      ++line;
      end_record();
    } else {
      cell.push_back(c);
    }
  }
  if (in_quotes)
    throw SchemaError(table.path, record_line, "unterminated quoted cell");
  if (row_started) end_record();
  return table;
}

inline Table read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

inline bool needs_quoting(const std::string& cell) {
  return cell.find_first_of(",\"\n\r") != std::string::npos;
}

inline std::string quote(const std::string& cell) {
  if (!needs_quoting(cell)) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += "\"";
  return out;
}

inline std::string format_row(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out.push_back(',');
    out += quote(cells[i]);
  }
  out.push_back('\n');
  return out;
}

}  // namespace csv

// ---- cell-level parsing ---------------------------------------------------

// A cell is "unknown" when empty or the literal token `unknown` (any case).
inline bool cell_is_missing(const std::string& cell) {
  if (cell.empty()) return true;
  if (cell.size() != 7) return false;
  static const char* kToken = "unknown";
  for (std::size_t i = 0; i < 7; ++i) {
    char c = cell[i];
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    if (c != kToken[i]) return false;
  }
  return true;
}

inline std::optional<double> parse_double_cell(const csv::Table& t, const csv::Row& row,
                                               std::size_t col) {
  const std::string& cell = t.cell(row, col);
  if (cell_is_missing(cell)) return std::nullopt;
  double v = 0;
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc{} || ptr != cell.data() + cell.size())
    throw SchemaError(t.path, row.line, "'" + cell + "' is not a number");
  return v;
}

inline std::optional<std::int64_t> parse_int_cell(const csv::Table& t, const csv::Row& row,
                                                  std::size_t col) {
  const std::string& cell = t.cell(row, col);
  if (cell_is_missing(cell)) return std::nullopt;
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc{} || ptr != cell.data() + cell.size())
    throw SchemaError(t.path, row.line, "'" + cell + "' is not an integer");
  return v;
}

inline std::optional<bool> parse_bool_cell(const csv::Table& t, const csv::Row& row,
                                           std::size_t col) {
  std::string cell = t.cell(row, col);
  if (cell_is_missing(cell)) return std::nullopt;
  for (char& c : cell)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  if (cell == "true" || cell == "1") return true;
  if (cell == "false" || cell == "0") return false;
  throw SchemaError(t.path, row.line, "'" + t.cell(row, col) + "' is not a boolean");
}

inline std::optional<std::string> parse_string_cell(const csv::Table& t, const csv::Row& row,
                                                    std::size_t col) {
  const std::string& cell = t.cell(row, col);
  if (cell_is_missing(cell)) return std::nullopt;
  return cell;
}

// Shortest decimal form that parses back to the identical double.
inline std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

inline std::vector<std::string> split_list(const std::string& cell, char sep = ';') {
  std::vector<std::string> out;
  if (cell_is_missing(cell)) return out;
  std::string cur;
  for (char c : cell) {
    if (c == sep) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline std::string join_list(const std::vector<std::string>& items, char sep = ';') {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out.push_back(sep);
    out += items[i];
  }
  return out;
}

}  // namespace sustainrec
