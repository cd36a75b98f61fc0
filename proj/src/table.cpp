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

#include "csvm/table.hpp"

#include <algorithm>

#include "csvm/error.hpp"

namespace csvm {

bool is_keyword(std::string_view field) {
  return std::find(kKeywords.begin(), kKeywords.end(), field) != kKeywords.end();
}

bool is_reserved_column_name(std::string_view name) {
  return name == "#TITLE" || name == "#HEADER" || name == "#META";
}

bool operator==(const CsvmTable &a, const CsvmTable &b) {
  if (a.title != b.title || a.header != b.header || a.types != b.types || a.widths != b.widths ||
      a.meta != b.meta || a.rows != b.rows || a.separator != b.separator ||
      a.annotations.size() != b.annotations.size()) {
    return false;
  }
  return std::equal(a.annotations.begin(), a.annotations.end(), b.annotations.begin(),
                    [](const Annotation &x, const Annotation &y) { return x.text == y.text; });
}

CsvmTable make_table(std::vector<std::string> header, std::vector<Row> rows) {
  CsvmTable t;
  t.types.assign(header.size(), "TEXT");
  t.widths.assign(header.size(), "10");
  for (auto &row : rows) {
    if (row.size() < header.size()) row.resize(header.size());
  }
  t.header = std::move(header);
  t.rows = std::move(rows);
  check_shape(t);
  return t;
}

void check_shape(const CsvmTable &table) {
  if (table.separator == '#' || table.separator == '\n' || table.separator == '\r') {
    throw CsvmError(ErrorCode::kInvalidArgument, "separator may not be '#' or a line terminator");
  }
  for (const auto &name : table.header) {
    if (is_reserved_column_name(name)) throw CsvmError(ErrorCode::kReservedName, "header name '" + name + "' is a keyword");
  }
  const auto n = table.header.size();
  if (table.types.size() != n || table.widths.size() != n) {
    throw CsvmError(ErrorCode::kSchemaMismatch, "types/widths do not match header length");
  }
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    if (table.rows[r].size() != n) {
      throw CsvmError(ErrorCode::kSchemaMismatch, "row " + std::to_string(r) + " has " +
                                                      std::to_string(table.rows[r].size()) + " cells, expected " +
                                                      std::to_string(n));
    }
  }
}

std::optional<std::size_t> column_index(const CsvmTable &table, std::string_view name) {
  auto it = std::find(table.header.begin(), table.header.end(), name);
  if (it == table.header.end()) return std::nullopt;
  return static_cast<std::size_t>(it - table.header.begin());
}

ColumnView get_column(const CsvmTable &table, std::string_view name) {
  auto idx = column_index(table, name);
  if (!idx) throw CsvmError(ErrorCode::kUnknownColumn, "no column named '" + std::string(name) + "'");
  ColumnView view;
  view.name = table.header[*idx];
  view.type_label = *idx < table.types.size() ? table.types[*idx] : std::string();
  view.width_label = *idx < table.widths.size() ? table.widths[*idx] : std::string();
  view.cells.reserve(table.rows.size());
  for (const auto &row : table.rows) view.cells.push_back(*idx < row.size() ? row[*idx] : std::string());
  return view;
}

CsvmTable project_columns(const CsvmTable &table, const std::vector<bool> &keep) {
  if (keep.size() != table.header.size()) {
    throw CsvmError(ErrorCode::kInvalidArgument, "projection mask does not match column count");
  }
  auto pick = [&keep](const std::vector<std::string> &src) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < keep.size() && i < src.size(); ++i) {
      if (keep[i]) out.push_back(src[i]);
    }
    return out;
  };
  CsvmTable out;
  out.title = table.title;
  out.meta = table.meta;
  out.annotations = table.annotations;
  out.separator = table.separator;
  out.header = pick(table.header);
  out.types = pick(table.types);
  out.widths = pick(table.widths);
  out.rows.reserve(table.rows.size());
  for (const auto &row : table.rows) out.rows.push_back(pick(row));
  return out;
}

CsvmTable delete_columns(const CsvmTable &table, std::string_view name) {
  std::vector<bool> keep(table.header.size());
  std::transform(table.header.begin(), table.header.end(), keep.begin(),
                 [name](const std::string &h) { return h != name; });
  return project_columns(table, keep);
}

CsvmTable rename_column(const CsvmTable &table, std::size_t index, const std::string &new_name,
                        const std::optional<std::string> &new_type,
                        const std::optional<std::string> &new_width) {
  if (index >= table.header.size()) {
    throw CsvmError(ErrorCode::kIndexOutOfRange, "column index " + std::to_string(index) + " out of range (" +
                                                     std::to_string(table.header.size()) + " columns)");
  }
  if (is_reserved_column_name(new_name)) {
    throw CsvmError(ErrorCode::kReservedName, "'" + new_name + "' is a reserved keyword");
  }
  CsvmTable out = table;
  out.header[index] = new_name;
  if (new_type) out.types[index] = *new_type;
  if (new_width) out.widths[index] = *new_width;
  return out;
}

}  // namespace csvm
