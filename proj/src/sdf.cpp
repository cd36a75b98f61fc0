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

#include "csvm/sdf.hpp"

#include <algorithm>

#include "csvm/error.hpp"

namespace csvm::sdf {

namespace {

constexpr std::string_view kMolEnd = "M  END";
constexpr std::string_view kRecordEnd = "$$$$";

std::string_view rtrim(std::string_view s) {
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool is_blank(std::string_view s) { return rtrim(s).empty(); }

std::vector<std::string_view> split_lines(std::string_view bytes) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    auto eol = bytes.find('\n', pos);
    auto line = bytes.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = eol == std::string_view::npos ? bytes.size() : eol + 1;
  }
  return lines;
}

[[noreturn]] void malformed(std::size_t record, const std::string &what) {
  throw CsvmError(ErrorCode::kMalformedRecord, "record " + std::to_string(record) + ": " + what);
}

// "> <KEY>" or ">  <KEY> (12)" etc.; the key is the text inside the first <...>.
std::optional<std::string> property_key(std::string_view line) {
  auto open = line.find('<');
  if (open == std::string_view::npos) return std::nullopt;
  auto close = line.find('>', open + 1);
  if (close == std::string_view::npos) return std::nullopt;
  return std::string(line.substr(open + 1, close - open - 1));
}

}  // namespace

const std::string *SdfRecord::find(std::string_view key) const {
  for (const auto &[k, v] : properties) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::vector<SdfRecord> parse_sdf(std::string_view bytes) {
  const auto lines = split_lines(bytes);
  std::vector<SdfRecord> records;
  std::size_t i = 0;
  const std::size_t n = lines.size();

  while (i < n) {
    if (std::all_of(lines.begin() + static_cast<std::ptrdiff_t>(i), lines.end(), is_blank)) break;
    const std::size_t index = records.size();
    SdfRecord rec;

    std::size_t end = i;
    while (end < n && rtrim(lines[end]) != kMolEnd) {
      if (rtrim(lines[end]) == kRecordEnd) malformed(index, "no \"M  END\" line before \"$$$$\"");
      ++end;
    }
    if (end == n) malformed(index, "no \"M  END\" line");
    for (std::size_t k = i; k <= end; ++k) {
      if (k > i) rec.molblock += '\n';
      rec.molblock += lines[k];
    }
    i = end + 1;

    bool closed = false;
    while (i < n) {
      const auto line = lines[i];
      if (rtrim(line) == kRecordEnd) {
        closed = true;
        ++i;
        break;
      }
      if (is_blank(line)) {
        ++i;
        continue;
      }
      if (line.front() != '>') malformed(index, "unexpected line '" + std::string(line) + "' outside a property block");
      auto key = property_key(line);
      if (!key) malformed(index, "property header '" + std::string(line) + "' has no <KEY>");
      if (rec.find(*key)) malformed(index, "duplicate property key '" + *key + "'");
      ++i;
      std::string value;
      bool first = true;
      while (i < n && !is_blank(lines[i]) && rtrim(lines[i]) != kRecordEnd) {
        if (!first) value += ' ';
        value += lines[i];
        first = false;
        ++i;
      }
      rec.properties.emplace_back(std::move(*key), std::move(value));
    }
    if (!closed) malformed(index, "missing \"$$$$\" terminator");
    records.push_back(std::move(rec));
  }
  return records;
}

std::string serialize_sdf(const std::vector<SdfRecord> &records) {
  std::string out;
  for (const auto &rec : records) {
    out += rec.molblock;
    out += '\n';
    for (const auto &[key, value] : rec.properties) {
      out += "> <" + key + ">\n";
      out += value;
      out += "\n\n";
    }
    out += kRecordEnd;
    out += '\n';
  }
  return out;
}

std::string escape_molblock(std::string_view molblock) {
  std::string out;
  out.reserve(molblock.size() + 16);
  for (char c : molblock) {
    if (c == '\\') {
      out += "\\\\";
    } else if (c == '\n') {
      out += "\\n";
    } else {
      out += c;
    }
  }
  return out;
}

std::string unescape_molblock(std::string_view cell) {
  std::string out;
  out.reserve(cell.size());
  for (std::size_t i = 0; i < cell.size(); ++i) {
    if (cell[i] == '\\' && i + 1 < cell.size()) {
      if (cell[i + 1] == 'n') {
        out += '\n';
        ++i;
        continue;
      }
      if (cell[i + 1] == '\\') {
        out += '\\';
        ++i;
        continue;
      }
    }
    out += cell[i];
  }
  return out;
}

const std::string &placeholder_molblock() {
  static const std::string block =
      "\n"
      "  csvm\n"
      "\n"
      "  0  0  0  0  0  0  0  0  0  0999 V2000\n"
      "M  END";
  return block;
}

CsvmTable sdf_to_csvm(const std::vector<SdfRecord> &records, const std::optional<std::string> &structure_column,
                      char separator) {
  std::vector<std::string> keys;
  for (const auto &rec : records) {
    for (const auto &prop : rec.properties) {
      if (std::find(keys.begin(), keys.end(), prop.first) == keys.end()) keys.push_back(prop.first);
    }
  }
  if (structure_column && std::find(keys.begin(), keys.end(), *structure_column) != keys.end()) {
    throw CsvmError(ErrorCode::kSchemaMismatch, "structure column '" + *structure_column + "' is also a property key");
  }

  auto checked = [separator](std::string value, std::string_view what) {
    if (value.find(separator) != std::string::npos) {
      throw CsvmError(ErrorCode::kSeparatorInCell, std::string(what) + " '" + value + "' contains the separator");
    }
    return value;
  };

  CsvmTable table;
  table.separator = separator;
  for (const auto &k : keys) table.header.push_back(checked(k, "property key"));
  if (structure_column) table.header.push_back(checked(*structure_column, "structure column"));
  table.types.assign(table.header.size(), "TEXT");
  table.widths.assign(table.header.size(), "10");

  table.rows.reserve(records.size());
  for (const auto &rec : records) {
    Row row;
    row.reserve(table.header.size());
    for (const auto &k : keys) {
      const auto *v = rec.find(k);
      row.push_back(v ? checked(*v, "value of " + k) : std::string());
    }
    if (structure_column) row.push_back(checked(escape_molblock(rec.molblock), "molblock"));
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::vector<SdfRecord> csvm_to_sdf(const CsvmTable &table, const std::optional<std::string> &structure_column) {
  std::optional<std::size_t> structure_idx;
  if (structure_column) {
    structure_idx = column_index(table, *structure_column);
    if (!structure_idx) throw CsvmError(ErrorCode::kUnknownColumn, "no column named '" + *structure_column + "'");
  }
  std::vector<SdfRecord> records;
  records.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto &row = table.rows[r];
    SdfRecord rec;
    rec.molblock = placeholder_molblock();
    if (structure_idx && !row[*structure_idx].empty()) {
      rec.molblock = unescape_molblock(row[*structure_idx]);
      auto last = rec.molblock.rfind('\n');
      auto tail = rtrim(std::string_view(rec.molblock).substr(last == std::string::npos ? 0 : last + 1));
      if (tail != kMolEnd) malformed(r, "structure cell does not end with an \"M  END\" line");
    }
    for (std::size_t c = 0; c < table.header.size(); ++c) {
      if (c == structure_idx || row[c].empty() || rec.find(table.header[c])) continue;
      rec.properties.emplace_back(table.header[c], row[c]);
    }
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace csvm::sdf
