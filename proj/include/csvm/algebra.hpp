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

#ifndef CSVM_ALGEBRA_HPP_
#define CSVM_ALGEBRA_HPP_

#include <optional>

#include "csvm/table.hpp"

namespace csvm {

// Column-oriented set operations. Rows are never merged or deduplicated:
// results always hold the rows of a followed by the rows of b.

/// Columns present in both tables, in a's order, duplicate names collapsed
/// to their first occurrence. Types and widths come from a. Absent when the
/// tables share no column name.
std::optional<CsvmTable> intersect(const CsvmTable &a, const CsvmTable &b);

/// a's columns followed by b's columns whose names a lacks. Missing cells are
/// filled with empty text; a wins on type/width for shared names.
CsvmTable union_of(const CsvmTable &a, const CsvmTable &b);

/// Row concatenation of two tables with identical headers. Throws
/// SchemaMismatch otherwise. Metadata comes from a.
CsvmTable concat(const CsvmTable &a, const CsvmTable &b);

/// Adds every column of \p mask that \p data lacks, filled with empty text.
/// The mask's rows are ignored; data keeps its rows and metadata.
CsvmTable mask_union(const CsvmTable &data, const CsvmTable &mask);

}  // namespace csvm

#endif  // CSVM_ALGEBRA_HPP_
