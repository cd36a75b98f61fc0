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

#ifndef CSVM_DIAGNOSTICS_HPP_
#define CSVM_DIAGNOSTICS_HPP_

#include <cstddef>
#include <string>
#include <vector>

namespace csvm {

enum class Severity { kWarning, kError };

struct Diagnostic {
  Severity severity = Severity::kWarning;
  std::size_t line = 0;  // 1-based source line, 0 when not tied to a line
  std::string message;

  bool operator==(const Diagnostic &) const = default;
};

struct ParseDiagnostics {
  std::vector<Diagnostic> entries;

  void warn(std::size_t line, std::string message) {
    entries.push_back({Severity::kWarning, line, std::move(message)});
  }
  void error(std::size_t line, std::string message) {
    entries.push_back({Severity::kError, line, std::move(message)});
  }

  bool has_errors() const;
  std::size_t error_count() const;
  std::size_t warning_count() const;
};

/// Renders one entry as "LEVEL line N: message".
std::string format_diagnostic(const Diagnostic &d);

}  // namespace csvm

#endif  // CSVM_DIAGNOSTICS_HPP_
