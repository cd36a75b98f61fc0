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

#include "csvm/dictionary.hpp"

#include <algorithm>

#include "csvm/error.hpp"
#include "csvm/io.hpp"

namespace csvm {

namespace {

bool is_standard_name(std::string_view name) { return !name.empty() && name.front() == '#'; }

bool in_list(const std::vector<std::string> &list, std::string_view value) {
  return std::find(list.begin(), list.end(), value) != list.end();
}

std::optional<std::string> standard_label(const CsvmDictionary &dict, std::optional<std::size_t> col,
                                          std::size_t row) {
  if (!col) return std::nullopt;
  return strip_standard_marker(dict.table.rows[row][*col]);
}

std::optional<std::size_t> set_column(const CsvmDictionary &dict, std::string_view set_name) {
  auto it = std::find(dict.set_names.begin(), dict.set_names.end(), set_name);
  if (it == dict.set_names.end()) return std::nullopt;
  return dict.set_columns[static_cast<std::size_t>(it - dict.set_names.begin())];
}

}  // namespace

bool CsvmDictionary::has_set(std::string_view name) const { return in_list(set_names, name); }

std::vector<std::string> TranslationSet::targets() const {
  std::vector<std::string> out;
  out.reserve(entries.size());
  for (const auto &e : entries) out.push_back(e.target);
  return out;
}

std::string strip_standard_marker(std::string_view cell) {
  if (!cell.empty() && cell.front() == '#') cell.remove_prefix(1);
  return std::string(cell);
}

CsvmDictionary load_dictionary(const CsvmTable &table) {
  check_shape(table);
  CsvmDictionary dict;
  dict.table = table;

  for (std::size_t c = 0; c < table.header.size(); ++c) {
    const auto &name = table.header[c];
    if (!is_standard_name(name)) {
      if (dict.has_set(name)) throw CsvmError(ErrorCode::kDuplicateSetName, "translation set '" + name + "' defined twice");
      dict.set_names.push_back(name);
      dict.set_columns.push_back(c);
    } else if (name == "#TYPE" && !dict.standard_type_col) {
      dict.standard_type_col = c;
    } else if (name == "#WIDTH" && !dict.standard_width_col) {
      dict.standard_width_col = c;
    }
  }
  if (dict.set_names.empty()) {
    throw CsvmError(ErrorCode::kNotADictionary, "no translation-set column (every column name starts with '#')");
  }
  if (std::none_of(table.header.begin(), table.header.end(),
                   [](const std::string &h) { return is_standard_name(h); })) {
    dict.diagnostics.warn(0, "no '#' columns; every column is read as a translation set");
  }

  dict.ignored_rows.assign(table.rows.size(), false);
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto &row = table.rows[r];
    const bool all_blank = std::all_of(dict.set_columns.begin(), dict.set_columns.end(), [&](std::size_t c) {
      return in_list(default_blank_list(), row[c]);
    });
    if (all_blank) {
      dict.ignored_rows[r] = true;
      dict.diagnostics.warn(0, "dictionary row " + std::to_string(r) + " has only blank set cells; ignored");
    }
  }
  return dict;
}

ParseDiagnostics validate_dictionary(const CsvmDictionary &dict) {
  ParseDiagnostics out = dict.diagnostics;
  const auto &t = dict.table;
  for (std::size_t c = 0; c < t.header.size(); ++c) {
    if (!is_standard_name(t.header[c])) continue;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      const auto &cell = t.rows[r][c];
      if (!is_standard_name(cell) && !in_list(default_blank_list(), cell)) {
        out.error(0, "row " + std::to_string(r) + ", column " + t.header[c] + ": value '" + cell +
                         "' lacks the leading '#'");
      }
    }
  }
  return out;
}

TranslationSet translation_set(const CsvmDictionary &dict, std::string_view set_name) {
  auto col = set_column(dict, set_name);
  if (!col) throw CsvmError(ErrorCode::kUnknownSet, "no translation set named '" + std::string(set_name) + "'");
  TranslationSet set;
  set.name = std::string(set_name);
  set.entries.reserve(dict.table.rows.size());
  for (std::size_t r = 0; r < dict.table.rows.size(); ++r) {
    set.entries.push_back({dict.table.rows[r][*col], standard_label(dict, dict.standard_type_col, r),
                           standard_label(dict, dict.standard_width_col, r)});
  }
  return set;
}

std::optional<TranslationEntry> resolve(const CsvmDictionary &dict, std::string_view header_value,
                                        std::string_view target_set) {
  auto target_col = set_column(dict, target_set);
  if (!target_col) return std::nullopt;
  const auto &rows = dict.table.rows;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (dict.ignored_rows[r]) continue;
    for (auto c : dict.set_columns) {
      if (rows[r][c] == header_value) {
        return TranslationEntry{rows[r][*target_col], standard_label(dict, dict.standard_type_col, r),
                                standard_label(dict, dict.standard_width_col, r)};
      }
    }
  }
  return std::nullopt;
}

CsvmTable apply_filter(const CsvmTable &data, const CsvmDictionary &dict, std::string_view target_set,
                       const FilterOptions &options) {
  if (dict.table.header.empty() || target_set.empty() || !dict.has_set(target_set)) return data;

  const bool drop_unmatched = options.strong || options.drop_unmatched;
  CsvmTable renamed = data;
  std::vector<bool> unmatched(data.header.size(), false);

  for (std::size_t c = 0; c < data.header.size(); ++c) {
    auto hit = resolve(dict, data.header[c], target_set);
    // A reserved keyword can never be a column name, so such a target counts as a miss.
    if (!hit || is_reserved_column_name(hit->target)) {
      unmatched[c] = true;
      continue;
    }
    renamed.header[c] = hit->target;
    if (options.apply_standard) {
      if (hit->type_label && !hit->type_label->empty()) renamed.types[c] = *hit->type_label;
      if (hit->width_label && !hit->width_label->empty()) renamed.widths[c] = *hit->width_label;
    }
  }

  const bool use_delcol = options.delcol.size() > 1;
  std::vector<bool> keep(renamed.header.size(), true);
  for (std::size_t c = 0; c < renamed.header.size(); ++c) {
    const auto &name = renamed.header[c];
    if (use_delcol && name == options.delcol) keep[c] = false;
    if (options.strong && in_list(options.blank_list, name)) keep[c] = false;
    if (drop_unmatched && unmatched[c]) keep[c] = false;
  }
  return project_columns(renamed, keep);
}

CsvmTable apply_filter_from_file(const CsvmTable &data, const std::filesystem::path &dict_path,
                                 std::string_view target_set, bool strong) {
  ParseOptions popts;
  popts.separator = data.separator;
  auto parsed = parse_csvm_file(dict_path, popts);
  auto dict = load_dictionary(parsed.table);
  FilterOptions fopts;
  fopts.strong = strong;
  return apply_filter(data, dict, target_set, fopts);
}

}  // namespace csvm
