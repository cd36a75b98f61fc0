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

#ifndef CSVM_IO_HPP_
#define CSVM_IO_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "csvm/diagnostics.hpp"
#include "csvm/error.hpp"
#include "csvm/table.hpp"

namespace csvm {

struct ParseOptions {
  char separator = kDefaultSeparator;
  /// Recover from structural problems instead of throwing MalformedFile.
  bool lenient = false;
};

struct ParseResult {
  CsvmTable table;
  ParseDiagnostics diagnostics;
};

/// Thrown by strict parsing. Carries every diagnostic collected over the
/// whole input, not just the first error.
class MalformedFile : public CsvmError {
 public:
  explicit MalformedFile(ParseDiagnostics diagnostics);

  const ParseDiagnostics &diagnostics() const noexcept { return diagnostics_; }

 private:
  ParseDiagnostics diagnostics_;
};

/// Parses CSVM text.
///
/// Lines split on LF with a trailing CR dropped. Blank lines are skipped.
/// Metadata lines may appear anywhere; the data-row order is the file order.
/// In strict mode any error-level diagnostic raises MalformedFile once the
/// whole input has been read. In lenient mode the same problems are
/// repaired and reported as warnings (or kept as errors where no repair
/// exists, such as a keyword used as a column name).
ParseResult parse_csvm(std::string_view bytes, const ParseOptions &options = {});

/// Reads and parses a file. Throws CsvmError(kIo) when it cannot be read.
ParseResult parse_csvm_file(const std::filesystem::path &path, const ParseOptions &options = {});

std::string read_file(const std::filesystem::path &path);
void write_file(const std::filesystem::path &path, std::string_view bytes);

struct SerializeOptions {
  std::string line_sep = "\n";
  /// Falls back to the table's own separator when unset.
  std::optional<char> separator;
  bool emit_annotations = true;
};

/// Normalized output: data rows, then annotations (ascending source line),
/// then #TITLE, #HEADER, #TYPE, #WIDTH and one #META line per entry.
///
/// CSVM has no quoting, so a separator or line terminator inside a cell or
/// label raises SeparatorInCell. A row that would read back as a blank line
/// or a '#' line raises UnrepresentableRow. Title and meta text may hold the
/// separator, since the parser joins their fields back together.
std::string serialize_csvm(const CsvmTable &table, const SerializeOptions &options = {});

/// Human-readable listing: one "index width type {name}" line per column,
/// then DATA_R / DATA_C counts, then "rownum [cell] [cell] ..." for the
/// selected rows. row_limit 0 lists every remaining row.
std::string dump(const CsvmTable &table, std::size_t row_offset = 0, std::size_t row_limit = 0);

}  // namespace csvm

#endif  // CSVM_IO_HPP_
