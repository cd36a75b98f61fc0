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

#include "csvm/algebra.hpp"

#include "csvm/error.hpp"

namespace csvm {

namespace {

// Appends rows of src laid out on the result columns; source_cols[i] is the
// column of src feeding result column i, or nullopt for an empty fill.
void append_rows(std::vector<Row> &dst, const CsvmTable &src,
                 const std::vector<std::optional<std::size_t>> &source_cols) {
  for (const auto &row : src.rows) {
    Row out;
    out.reserve(source_cols.size());
    for (const auto &col : source_cols) out.push_back(col ? row[*col] : std::string());
    dst.push_back(std::move(out));
  }
}

}  // namespace

std::optional<CsvmTable> intersect(const CsvmTable &a, const CsvmTable &b) {
  CsvmTable out;
  out.title = "intersection";
  out.separator = a.separator;
  std::vector<std::optional<std::size_t>> from_a, from_b;
  for (std::size_t c = 0; c < a.header.size(); ++c) {
    const auto &name = a.header[c];
    if (column_index(a, name) != c) continue;  // later duplicate
    auto in_b = column_index(b, name);
    if (!in_b) continue;
    out.header.push_back(name);
    out.types.push_back(a.types[c]);
    out.widths.push_back(a.widths[c]);
    from_a.emplace_back(c);
    from_b.emplace_back(in_b);
  }
  if (out.header.empty()) return std::nullopt;
  out.rows.reserve(a.rows.size() + b.rows.size());
  append_rows(out.rows, a, from_a);
  append_rows(out.rows, b, from_b);
  return out;
}

CsvmTable union_of(const CsvmTable &a, const CsvmTable &b) {
  CsvmTable out;
  out.title = "union";
  out.separator = a.separator;
  out.header = a.header;
  out.types = a.types;
  out.widths = a.widths;

  std::vector<std::optional<std::size_t>> from_a, from_b;
  for (std::size_t c = 0; c < a.header.size(); ++c) {
    from_a.emplace_back(c);
    from_b.push_back(column_index(b, a.header[c]));
  }
  for (std::size_t c = 0; c < b.header.size(); ++c) {
    if (column_index(a, b.header[c])) continue;
    out.header.push_back(b.header[c]);
    out.types.push_back(b.types[c]);
    out.widths.push_back(b.widths[c]);
    from_a.emplace_back(std::nullopt);
    from_b.emplace_back(c);
  }
  out.rows.reserve(a.rows.size() + b.rows.size());
  append_rows(out.rows, a, from_a);
  append_rows(out.rows, b, from_b);
  return out;
}

CsvmTable concat(const CsvmTable &a, const CsvmTable &b) {
  if (a.header != b.header) throw CsvmError(ErrorCode::kSchemaMismatch, "cannot concatenate tables with different headers");
  CsvmTable out = a;
  out.rows.insert(out.rows.end(), b.rows.begin(), b.rows.end());
  return out;
}

CsvmTable mask_union(const CsvmTable &data, const CsvmTable &mask) {
  CsvmTable stripped = mask;
  stripped.rows.clear();
  CsvmTable out = union_of(data, stripped);
  out.title = data.title;
  out.meta = data.meta;
  out.annotations = data.annotations;
  return out;
}

}  // namespace csvm
