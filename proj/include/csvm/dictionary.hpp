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

#ifndef CSVM_DICTIONARY_HPP_
#define CSVM_DICTIONARY_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "csvm/diagnostics.hpp"
#include "csvm/table.hpp"

namespace csvm {

/// A CSVM table read as a dictionary.
///
/// Columns whose names do not start with '#' are translation sets: each row
/// lists alternate names of one column across naming systems. The "#TYPE"
/// and "#WIDTH" columns form the Standard shared by every set; their cells
/// carry a leading '#' ("#NUMERIC", "#10"). Any other '#'-named column (unit
/// annotations and the like) stays in the table and is ignored by filtering.
struct CsvmDictionary {
  CsvmTable table;
  std::vector<std::string> set_names;
  std::vector<std::size_t> set_columns;  // parallel to set_names
  std::optional<std::size_t> standard_type_col;
  std::optional<std::size_t> standard_width_col;
  /// Rows whose set cells are all blank. They never take part in lookups.
  std::vector<bool> ignored_rows;
  ParseDiagnostics diagnostics;

  bool has_set(std::string_view name) const;
  bool has_standard() const { return standard_type_col || standard_width_col; }
};

struct TranslationEntry {
  std::string target;
  std::optional<std::string> type_label;
  std::optional<std::string> width_label;

  bool operator==(const TranslationEntry &) const = default;
};

struct TranslationSet {
  std::string name;
  std::vector<TranslationEntry> entries;  // one per dictionary row, in row order

  std::vector<std::string> targets() const;
};

inline const std::vector<std::string> &default_blank_list() {
  static const std::vector<std::string> blanks = {"", "-"};
  return blanks;
}

inline constexpr std::string_view kDefaultDelcol = "__DEL__";

struct FilterOptions {
  /// Strong ("blank") mode: also drop columns whose translated name is a
  /// blank marker, and columns the set does not know.
  bool strong = false;
  /// Compared by exact, case-sensitive equality.
  std::vector<std::string> blank_list = default_blank_list();
  /// Columns translated to this name are deleted. Ignored when it is shorter
  /// than two characters.
  std::string delcol = std::string(kDefaultDelcol);
  /// Translated columns also take their type/width from the Standard.
  bool apply_standard = false;
  /// Delete columns the dictionary cannot resolve. Implied by strong.
  bool drop_unmatched = false;
};

/// Throws NotADictionary when no translation-set column exists and
/// DuplicateSetName when two set columns share a name.
CsvmDictionary load_dictionary(const CsvmTable &table);

/// Reports Standard cells lacking the leading '#'.
ParseDiagnostics validate_dictionary(const CsvmDictionary &dict);

/// Throws UnknownSet.
TranslationSet translation_set(const CsvmDictionary &dict, std::string_view set_name);

/// Strips one leading '#' from a Standard cell.
std::string strip_standard_marker(std::string_view cell);

/// Finds the translation of \p header_value into \p target_set.
///
/// Rows are scanned top to bottom and, within a row, set columns left to
/// right; the first cell equal to header_value selects the row. Any set may
/// therefore serve as the source naming system.
std::optional<TranslationEntry> resolve(const CsvmDictionary &dict, std::string_view header_value,
                                        std::string_view target_set);

/// Renames (and optionally retypes) the columns of \p data into \p target_set,
/// then deletes columns translated to the delcol sentinel and, in strong
/// mode, blank-marked or unresolved columns. Cell data is never touched.
/// Returns \p data unchanged when target_set is empty or unknown.
CsvmTable apply_filter(const CsvmTable &data, const CsvmDictionary &dict, std::string_view target_set,
                       const FilterOptions &options = {});

/// Parses and loads the dictionary file, then filters with default options
/// apart from \p strong.
CsvmTable apply_filter_from_file(const CsvmTable &data, const std::filesystem::path &dict_path,
                                 std::string_view target_set, bool strong);

}  // namespace csvm

#endif  // CSVM_DICTIONARY_HPP_
