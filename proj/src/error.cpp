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

#include "csvm/diagnostics.hpp"
#include "csvm/error.hpp"

#include <algorithm>

namespace csvm {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownColumn: return "UnknownColumn";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kReservedName: return "ReservedName";
    case ErrorCode::kMalformedFile: return "MalformedFile";
    case ErrorCode::kSeparatorInCell: return "SeparatorInCell";
    case ErrorCode::kUnrepresentableRow: return "UnrepresentableRow";
    case ErrorCode::kNotADictionary: return "NotADictionary";
    case ErrorCode::kDuplicateSetName: return "DuplicateSetName";
    case ErrorCode::kUnknownSet: return "UnknownSet";
    case ErrorCode::kSchemaMismatch: return "SchemaMismatch";
    case ErrorCode::kMalformedRecord: return "MalformedRecord";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIo: return "IoError";
  }
  return "Unknown";
}

bool ParseDiagnostics::has_errors() const { return error_count() > 0; }

std::size_t ParseDiagnostics::error_count() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const Diagnostic &d) {
    return d.severity == Severity::kError;
  }));
}

std::size_t ParseDiagnostics::warning_count() const { return entries.size() - error_count(); }

std::string format_diagnostic(const Diagnostic &d) {
  std::string out = d.severity == Severity::kError ? "ERROR" : "WARNING";
  out += " line " + std::to_string(d.line) + ": " + d.message;
  return out;
}

}  // namespace csvm
