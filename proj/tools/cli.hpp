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

#ifndef CSVM_TOOLS_CLI_HPP_
#define CSVM_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace csvm::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalid = 1,
  kIoFailure = 2,
  kEmptyResult = 3,
};

/// Runs one csvm command. \p args excludes the program name. Data goes to
/// \p out unless -o is given; diagnostics go to \p err.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Accepts "tab", "comma", "semicolon" or a single character.
char parse_separator(const std::string &spec);

}  // namespace csvm::cli

#endif  // CSVM_TOOLS_CLI_HPP_
