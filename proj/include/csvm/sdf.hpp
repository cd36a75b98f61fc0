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

#ifndef CSVM_SDF_HPP_
#define CSVM_SDF_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "csvm/table.hpp"

namespace csvm::sdf {

/// One SDF record: a molfile block (ending with its "M  END" line, without a
/// trailing newline) and the "> <key>" descriptor blocks that follow it.
struct SdfRecord {
  std::string molblock;
  std::vector<std::pair<std::string, std::string>> properties;

  const std::string *find(std::string_view key) const;

  bool operator==(const SdfRecord &) const = default;
};

/// Throws MalformedRecord (message names the 0-based record index) for a
/// record without "M  END", a record not closed by "$$$$", a stray line
/// between property blocks, or a repeated key.
std::vector<SdfRecord> parse_sdf(std::string_view bytes);

/// Writes records back out, one blank line after each property value.
std::string serialize_sdf(const std::vector<SdfRecord> &records);

/// Molblock to single-cell text: a backslash is doubled and each newline becomes
/// the two characters backslash, n.
std::string escape_molblock(std::string_view molblock);
std::string unescape_molblock(std::string_view cell);

/// Molblock of an empty (0-atom) molecule, used when a row has no structure.
const std::string &placeholder_molblock();

/// One row per record and one column per property key in first-appearance
/// order, plus \p structure_column (last) holding the escaped molblock.
/// All types TEXT, all widths "10".
CsvmTable sdf_to_csvm(const std::vector<SdfRecord> &records,
                      const std::optional<std::string> &structure_column = std::nullopt,
                      char separator = kDefaultSeparator);

/// One record per row. Empty cells are skipped. Throws UnknownColumn when
/// \p structure_column is given but missing, MalformedRecord when a structure
/// cell is not a complete molblock.
std::vector<SdfRecord> csvm_to_sdf(const CsvmTable &table,
                                   const std::optional<std::string> &structure_column = std::nullopt);

}  // namespace csvm::sdf

#endif  // CSVM_SDF_HPP_
