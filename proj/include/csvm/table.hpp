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

#ifndef CSVM_TABLE_HPP_
#define CSVM_TABLE_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace csvm {

using Row = std::vector<std::string>;

inline constexpr char kDefaultSeparator = '\t';

/// The five metadata keywords. A line whose first field equals one of these
/// exactly is metadata; anything else starting with '#' is an annotation.
inline constexpr std::array<std::string_view, 5> kKeywords = {"#TITLE", "#HEADER", "#TYPE", "#WIDTH",
                                                              "#META"};

bool is_keyword(std::string_view field);

/// Keywords that may not name a column. "#TYPE" and "#WIDTH" stay legal
/// because dictionaries name their Standard columns that way.
bool is_reserved_column_name(std::string_view name);

/// A '#' remark line kept for humans. line is the 1-based position in the
/// source file and only orders re-emission.
struct Annotation {
  std::size_t line = 0;
  std::string text;
};

/// In-memory CSVM table. Cells are opaque text; type and width labels are
/// advisory metadata.
///
/// Every row holds exactly header.size() cells, and types/widths run
/// parallel to header. Tables built by the parser or by the operations in
/// this library keep that shape; check_shape() verifies it for hand-built
/// values.
struct CsvmTable {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::string> types;
  std::vector<std::string> widths;
  std::vector<std::string> meta;
  std::vector<Annotation> annotations;
  std::vector<Row> rows;
  char separator = kDefaultSeparator;

  std::size_t column_count() const { return header.size(); }
  std::size_t row_count() const { return rows.size(); }

  /// Content equality. Annotations compare by text and order only, since
  /// their line positions change whenever a table is re-serialized.
  friend bool operator==(const CsvmTable &a, const CsvmTable &b);
};

struct ColumnView {
  std::string name;
  std::string type_label;
  std::string width_label;
  std::vector<std::string> cells;

  bool operator==(const ColumnView &) const = default;
};

/// Builds a rectangular table with the given header, TEXT types and "10"
/// widths. Rows shorter than the header are padded with empty cells.
CsvmTable make_table(std::vector<std::string> header, std::vector<Row> rows = {});

/// Throws ReservedName / InvalidArgument / SchemaMismatch when the table
/// breaks a structural invariant.
void check_shape(const CsvmTable &table);

std::optional<std::size_t> column_index(const CsvmTable &table, std::string_view name);

ColumnView get_column(const CsvmTable &table, std::string_view name);

/// Removes every column named \p name.
CsvmTable delete_columns(const CsvmTable &table, std::string_view name);

CsvmTable rename_column(const CsvmTable &table, std::size_t index, const std::string &new_name,
                        const std::optional<std::string> &new_type = std::nullopt,
                        const std::optional<std::string> &new_width = std::nullopt);

/// Keeps the columns whose flag is set, in order. keep.size() must equal the
/// column count.
CsvmTable project_columns(const CsvmTable &table, const std::vector<bool> &keep);

}  // namespace csvm

#endif  // CSVM_TABLE_HPP_
