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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "csvm/algebra.hpp"
#include "csvm/dictionary.hpp"
#include "csvm/io.hpp"
#include "csvm/sdf.hpp"

namespace csvm::cli {

namespace {

struct Streams {
  std::ostream &out;
  std::ostream &err;
};

void print_diagnostics(const ParseDiagnostics &diag, std::ostream &err) {
  for (const auto &d : diag.entries) err << format_diagnostic(d) << '\n';
}

// Lenient load for commands that transform data; problems are reported but
// never block the command.
CsvmTable load(const std::string &path, char sep, std::ostream &err) {
  ParseOptions opts;
  opts.separator = sep;
  opts.lenient = true;
  auto parsed = parse_csvm_file(path, opts);
  if (!parsed.diagnostics.entries.empty()) {
    err << path << ":\n";
    print_diagnostics(parsed.diagnostics, err);
  }
  return std::move(parsed.table);
}

void emit(const std::string &bytes, const std::string &out_path, std::ostream &out) {
  if (out_path.empty()) {
    out << bytes;
  } else {
    write_file(out_path, bytes);
  }
}

std::string serialize(const CsvmTable &table, char sep) {
  SerializeOptions opts;
  opts.separator = sep;
  return serialize_csvm(table, opts);
}

int cmd_validate(const std::string &path, char sep, bool strict, Streams io) {
  ParseOptions opts;
  opts.separator = sep;
  ParseDiagnostics diag;
  try {
    diag = parse_csvm(read_file(path), opts).diagnostics;
  } catch (const MalformedFile &e) {
    diag = e.diagnostics();
  }
  print_diagnostics(diag, io.err);
  const auto errors = diag.error_count();
  const auto warnings = diag.warning_count();
  io.out << path << ": " << errors << " error(s), " << warnings << " warning(s)\n";
  if (errors > 0 || (strict && warnings > 0)) return kInvalid;
  return kOk;
}

int cmd_info(const std::string &path, char sep, Streams io) {
  const auto table = load(path, sep, io.err);
  auto &out = io.out;
  out << "title: " << table.title << '\n';
  out << "columns: " << table.column_count() << '\n';
  out << "rows: " << table.row_count() << '\n';
  for (std::size_t c = 0; c < table.column_count(); ++c) {
    out << "  [" << c << "] " << table.header[c] << "  type=" << table.types[c] << "  width=" << table.widths[c]
        << '\n';
  }
  out << "annotations: " << table.annotations.size() << '\n';
  out << "meta: " << table.meta.size() << '\n';

  // Only files carrying '#'-named Standard columns are reported as
  // dictionaries; any plain table would otherwise qualify.
  const bool has_hash_column = std::any_of(table.header.begin(), table.header.end(),
                                           [](const std::string &h) { return !h.empty() && h.front() == '#'; });
  if (has_hash_column) {
    try {
      const auto dict = load_dictionary(table);
      out << "sets:";
      for (std::size_t i = 0; i < dict.set_names.size(); ++i) out << (i ? ", " : " ") << dict.set_names[i];
      out << '\n';
    } catch (const CsvmError &) {
      // Not a usable dictionary; nothing more to report.
    }
  }
  return kOk;
}

}  // namespace

char parse_separator(const std::string &spec) {
  if (spec == "tab") return '\t';
  if (spec == "comma") return ',';
  if (spec == "semicolon") return ';';
  if (spec.size() == 1 && spec[0] != '#' && spec[0] != '\n' && spec[0] != '\r') return spec[0];
  throw CsvmError(ErrorCode::kInvalidArgument, "bad separator '" + spec + "'");
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  Streams io{out, err};
  CLI::App app{"Read, validate, translate and combine CSVM tables", "csvm"};
  app.require_subcommand(1);

  std::string sep_spec = "tab";
  std::string out_path;
  std::function<int(char)> action;

  auto add_sep = [&sep_spec](CLI::App *cmd) {
    cmd->add_option("--sep", sep_spec, "Field separator: tab, comma, semicolon or one character")->capture_default_str();
  };
  auto add_out = [&out_path](CLI::App *cmd) { cmd->add_option("-o,--output", out_path, "Output file (default: stdout)"); };

  std::string path, path_b;

  auto *validate = app.add_subcommand("validate", "Check a CSVM file and list diagnostics");
  bool strict = false;
  validate->add_option("path", path)->required();
  validate->add_flag("--strict", strict, "Treat warnings as failures");
  add_sep(validate);
  validate->callback([&] { action = [&](char sep) { return cmd_validate(path, sep, strict, io); }; });

  auto *info = app.add_subcommand("info", "Summarize a CSVM file");
  info->add_option("path", path)->required();
  add_sep(info);
  info->callback([&] { action = [&](char sep) { return cmd_info(path, sep, io); }; });

  auto *dump_cmd = app.add_subcommand("dump", "List columns and rows");
  std::size_t offset = 0, limit = 0;
  dump_cmd->add_option("path", path)->required();
  dump_cmd->add_option("--offset", offset, "First row to list")->capture_default_str();
  dump_cmd->add_option("--limit", limit, "Number of rows to list (0: all)")->capture_default_str();
  add_sep(dump_cmd);
  dump_cmd->callback([&] {
    action = [&](char sep) {
      out << dump(load(path, sep, err), offset, limit);
      return kOk;
    };
  });

  auto *filter = app.add_subcommand("filter", "Translate column names through a dictionary set");
  std::string dict_path, set_name;
  FilterOptions fopts;
  filter->add_option("path", path)->required();
  filter->add_option("--dict", dict_path, "Dictionary file")->required();
  filter->add_option("--set", set_name, "Target translation set")->required();
  filter->add_flag("--strong", fopts.strong, "Strong mode: drop blank-marked and unknown columns");
  filter->add_flag("--apply-standard", fopts.apply_standard, "Take type/width from the dictionary Standard");
  filter->add_flag("--drop-unmatched", fopts.drop_unmatched, "Drop columns the dictionary does not list");
  filter->add_option("--delcol", fopts.delcol, "Deletion sentinel")->capture_default_str();
  add_sep(filter);
  add_out(filter);
  filter->callback([&] {
    action = [&](char sep) {
      const auto data = load(path, sep, err);
      const auto dict = load_dictionary(load(dict_path, sep, err));
      if (!dict.has_set(set_name)) {
        err << "warning: dictionary " << dict_path << " has no set '" << set_name << "'; input copied unchanged\n";
      }
      emit(serialize(apply_filter(data, dict, set_name, fopts), sep), out_path, out);
      return kOk;
    };
  });

  auto add_pair = [&](const char *name, const char *help) {
    auto *cmd = app.add_subcommand(name, help);
    cmd->add_option("a", path)->required();
    cmd->add_option("b", path_b)->required();
    add_sep(cmd);
    add_out(cmd);
    return cmd;
  };
  auto *union_cmd = add_pair("union", "Union of columns, rows of a then b");
  union_cmd->callback([&] {
    action = [&](char sep) {
      emit(serialize(union_of(load(path, sep, err), load(path_b, sep, err)), sep), out_path, out);
      return kOk;
    };
  });
  auto *intersect_cmd = add_pair("intersect", "Common columns, rows of a then b");
  intersect_cmd->callback([&] {
    action = [&](char sep) {
      auto r = intersect(load(path, sep, err), load(path_b, sep, err));
      if (!r) {
        out << "None data found\n";
        return kEmptyResult;
      }
      emit(serialize(*r, sep), out_path, out);
      return kOk;
    };
  });
  auto *cat_cmd = add_pair("cat", "Append the rows of b to a (same header)");
  cat_cmd->callback([&] {
    action = [&](char sep) {
      emit(serialize(concat(load(path, sep, err), load(path_b, sep, err)), sep), out_path, out);
      return kOk;
    };
  });

  std::string structure_col;
  auto *from_sdf = app.add_subcommand("from-sdf", "Convert an SDF file to CSVM");
  from_sdf->add_option("path", path)->required();
  from_sdf->add_option("--structure-col", structure_col, "Column receiving the escaped molblock");
  add_sep(from_sdf);
  add_out(from_sdf);
  from_sdf->callback([&] {
    action = [&](char sep) {
      auto records = sdf::parse_sdf(read_file(path));
      std::optional<std::string> col;
      if (!structure_col.empty()) col = structure_col;
      emit(serialize(sdf::sdf_to_csvm(records, col, sep), sep), out_path, out);
      return kOk;
    };
  });

  auto *to_sdf = app.add_subcommand("to-sdf", "Convert a CSVM file to SDF");
  to_sdf->add_option("path", path)->required();
  to_sdf->add_option("--structure-col", structure_col, "Column holding escaped molblocks");
  add_sep(to_sdf);
  add_out(to_sdf);
  to_sdf->callback([&] {
    action = [&](char sep) {
      std::optional<std::string> col;
      if (!structure_col.empty()) col = structure_col;
      emit(sdf::serialize_sdf(sdf::csvm_to_sdf(load(path, sep, err), col)), out_path, out);
      return kOk;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    return action(parse_separator(sep_spec));
  } catch (const MalformedFile &e) {
    print_diagnostics(e.diagnostics(), err);
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const CsvmError &e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::kIo ? kIoFailure : kInvalid;
  }
}

}  // namespace csvm::cli
