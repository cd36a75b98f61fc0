/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "csvm/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace csvm {

namespace {

std::vector<std::string> split_fields(std::string_view line, char sep) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      fields.emplace_back(line.substr(start));
      return fields;
    }
    fields.emplace_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string join_fields(const std::vector<std::string> &fields, std::size_t from, char sep) {
  std::string out;
  for (std::size_t i = from; i < fields.size(); ++i) {
    if (i > from) out += sep;
    out += fields[i];
  }
  return out;
}

// A separator is never whitespace for this purpose: "\t\t" under TAB is a
// row of three empty cells, not a blank line.
bool is_blank_line(std::string_view line, char sep) {
  return std::all_of(line.begin(), line.end(), [sep](char c) {
    return c != sep && (c == ' ' || c == '\t' || c == '\v' || c == '\f' || c == '\r');
  });
}

std::string_view first_field(std::string_view line, char sep) {
  return line.substr(0, line.find(sep));
}

void check_separator(char sep) {
  if (sep == '#' || sep == '\n' || sep == '\r' || sep == '\0') {
    throw CsvmError(ErrorCode::kInvalidArgument, "separator may not be '#', NUL or a line terminator");
  }
}

struct SeenLine {
  bool present = false;
  std::size_t line = 0;
};

}  // namespace

MalformedFile::MalformedFile(ParseDiagnostics diagnostics)
    : CsvmError(ErrorCode::kMalformedFile,
                [&] {
                  std::string msg = std::to_string(diagnostics.error_count()) + " error(s)";
                  for (const auto &d : diagnostics.entries) {
                    if (d.severity == Severity::kError) return msg + "; first: " + format_diagnostic(d);
                  }
                  return msg;
                }()),
      diagnostics_(std::move(diagnostics)) {}

ParseResult parse_csvm(std::string_view bytes, const ParseOptions &options) {
  const char sep = options.separator;
  check_separator(sep);
  const bool strict = !options.lenient;

  ParseResult result;
  CsvmTable &table = result.table;
  ParseDiagnostics &diag = result.diagnostics;
  table.separator = sep;

  // Problems with a lenient repair are errors in strict mode and warnings
  // otherwise.
  auto report = [&](std::size_t line, std::string message) {
    if (strict) {
      diag.error(line, std::move(message));
    } else {
      diag.warn(line, std::move(message));
    }
  };

  SeenLine seen_title, seen_header, seen_types, seen_widths;
  std::vector<std::size_t> row_lines;

  auto claim = [&](SeenLine &seen, std::string_view keyword, std::size_t line) {
    if (seen.present) {
      report(line, "duplicate " + std::string(keyword) + " (previous at line " + std::to_string(seen.line) +
                       (strict ? ")" : "); last one wins"));
    }
    seen = {true, line};
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    auto eol = bytes.find('\n', pos);
    std::string_view line = bytes.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? bytes.size() : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::string repaired;
    if (line.find('\r') != std::string_view::npos) {
      report(line_no, strict ? "stray carriage return inside a line" : "stray carriage return inside a line; removed");
      repaired.assign(line);
      std::erase(repaired, '\r');
      line = repaired;
    }
    if (is_blank_line(line, sep)) continue;

    const auto head = first_field(line, sep);
    if (is_keyword(head)) {
      auto fields = split_fields(line, sep);
      std::vector<std::string> rest(fields.begin() + 1, fields.end());
      if (head == "#TITLE") {
        claim(seen_title, head, line_no);
        table.title = join_fields(fields, 1, sep);
      } else if (head == "#HEADER") {
        claim(seen_header, head, line_no);
        for (const auto &name : rest) {
          if (is_reserved_column_name(name)) diag.error(line_no, "column name '" + name + "' is a reserved keyword");
        }
        table.header = std::move(rest);
      } else if (head == "#TYPE") {
        claim(seen_types, head, line_no);
        table.types = std::move(rest);
      } else if (head == "#WIDTH") {
        claim(seen_widths, head, line_no);
        table.widths = std::move(rest);
      } else {
        table.meta.push_back(join_fields(fields, 1, sep));
      }
    } else if (!head.empty() && head.front() == '#') {
      table.annotations.push_back({line_no, std::string(line)});
    } else {
      table.rows.push_back(split_fields(line, sep));
      row_lines.push_back(line_no);
    }
  }

  if (!seen_header.present) {
    std::size_t widest = 0;
    for (const auto &row : table.rows) widest = std::max(widest, row.size());
    report(0, "missing #HEADER; synthesized " + std::to_string(widest) + " column name(s)");
    for (std::size_t i = 0; i < widest; ++i) table.header.push_back("col_" + std::to_string(i + 1));
  }
  const auto ncols = table.header.size();

  auto fit_labels = [&](std::vector<std::string> &labels, const SeenLine &seen, std::string_view keyword) {
    if (!seen.present) {
      if (seen_header.present) diag.warn(0, "missing " + std::string(keyword) + "; using empty labels");
      labels.assign(ncols, std::string());
    } else if (labels.size() != ncols) {
      report(seen.line, std::string(keyword) + " has " + std::to_string(labels.size()) + " field(s) but #HEADER has " +
                            std::to_string(ncols));
      labels.resize(ncols);
    }
  };
  fit_labels(table.types, seen_types, "#TYPE");
  fit_labels(table.widths, seen_widths, "#WIDTH");

  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    auto &row = table.rows[r];
    if (row.size() > ncols) {
      report(row_lines[r], "row has " + std::to_string(row.size()) + " cells but #HEADER has " +
                               std::to_string(ncols) + (strict ? "" : "; truncated"));
      row.resize(ncols);
    } else if (row.size() < ncols) {
      row.resize(ncols);
    }
  }

  if (strict && diag.has_errors()) throw MalformedFile(diag);
  return result;
}

std::string read_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CsvmError(ErrorCode::kIo, "cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw CsvmError(ErrorCode::kIo, "error while reading '" + path.string() + "'");
  return std::move(buf).str();
}

void write_file(const std::filesystem::path &path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CsvmError(ErrorCode::kIo, "cannot open '" + path.string() + "' for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw CsvmError(ErrorCode::kIo, "error while writing '" + path.string() + "'");
}

ParseResult parse_csvm_file(const std::filesystem::path &path, const ParseOptions &options) {
  return parse_csvm(read_file(path), options);
}

std::string serialize_csvm(const CsvmTable &table, const SerializeOptions &options) {
  const char sep = options.separator.value_or(table.separator);
  check_separator(sep);
  check_shape(table);

  auto has_terminator = [](std::string_view s) { return s.find_first_of("\r\n") != std::string_view::npos; };
  auto check_field = [&](std::string_view value, std::string_view where) {
    if (value.find(sep) != std::string_view::npos || has_terminator(value)) {
      throw CsvmError(ErrorCode::kSeparatorInCell,
                      std::string(where) + " value '" + std::string(value) + "' contains the separator or a line break");
    }
  };
  auto check_free_text = [&](std::string_view value, std::string_view where) {
    if (has_terminator(value)) {
      throw CsvmError(ErrorCode::kSeparatorInCell, std::string(where) + " contains a line break");
    }
  };

  for (const auto &h : table.header) check_field(h, "#HEADER");
  for (const auto &t : table.types) check_field(t, "#TYPE");
  for (const auto &w : table.widths) check_field(w, "#WIDTH");
  check_free_text(table.title, "#TITLE");
  for (const auto &m : table.meta) check_free_text(m, "#META");

  std::string out;
  auto emit_line = [&](std::string_view line) {
    out += line;
    out += options.line_sep;
  };

  std::string line;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto &row = table.rows[r];
    for (const auto &cell : row) check_field(cell, "cell");
    line.clear();
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += sep;
      line += row[c];
    }
    if (is_blank_line(line, sep)) {
      throw CsvmError(ErrorCode::kUnrepresentableRow, "row " + std::to_string(r) + " would be read back as a blank line");
    }
    if (line.front() == '#') {
      throw CsvmError(ErrorCode::kUnrepresentableRow,
                      "row " + std::to_string(r) + " starts with '#' and would be read back as a remark");
    }
    emit_line(line);
  }

  if (options.emit_annotations) {
    std::vector<const Annotation *> ordered;
    for (const auto &a : table.annotations) ordered.push_back(&a);
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const Annotation *x, const Annotation *y) { return x->line < y->line; });
    for (const auto *a : ordered) {
      check_free_text(a->text, "annotation");
      const auto head = first_field(a->text, sep);
      if (head.empty() || head.front() != '#' || is_keyword(head)) {
        throw CsvmError(ErrorCode::kUnrepresentableRow, "annotation '" + a->text + "' would not read back as a remark");
      }
      emit_line(a->text);
    }
  }

  auto emit_list = [&](std::string_view keyword, const std::vector<std::string> &values) {
    line = keyword;
    for (const auto &v : values) {
      line += sep;
      line += v;
    }
    emit_line(line);
  };
  emit_line("#TITLE" + std::string(1, sep) + table.title);
  emit_list("#HEADER", table.header);
  emit_list("#TYPE", table.types);
  emit_list("#WIDTH", table.widths);
  for (const auto &m : table.meta) emit_line("#META" + std::string(1, sep) + m);
  return out;
}

std::string dump(const CsvmTable &table, std::size_t row_offset, std::size_t row_limit) {
  std::ostringstream os;
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    os << std::left << std::setw(7) << c << std::setw(8) << (c < table.widths.size() ? table.widths[c] : "")
       << std::setw(9) << (c < table.types.size() ? table.types[c] : "") << '{' << table.header[c] << "}\n";
  }
  os << "DATA_R " << table.rows.size() << '\n';
  os << "DATA_C " << table.header.size() << '\n';
  const auto begin = std::min(row_offset, table.rows.size());
  const auto end = row_limit == 0 ? table.rows.size() : std::min(table.rows.size(), begin + row_limit);
  for (std::size_t r = begin; r < end; ++r) {
    os << std::left << std::setw(7) << r;
    const auto &row = table.rows[r];
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) os << ' ';
      os << '[' << row[c] << ']';
    }
    os << '\n';
  }
  return std::move(os).str();
}

}  // namespace csvm
