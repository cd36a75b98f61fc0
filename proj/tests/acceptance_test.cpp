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

// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "csvm/algebra.hpp"
#include "csvm/dictionary.hpp"
#include "csvm/io.hpp"
#include "csvm/sdf.hpp"
#include "test_util.hpp"

namespace {

using namespace csvm;
using csvm::testing::fixture;
using csvm::testing::Gen;
using csvm::testing::load_fixture;
using csvm::testing::name_set;

struct CriterionFailed {
  std::string why;
};

void require(bool ok, const std::string &why) {
  if (!ok) throw CriterionFailed{why};
}

const std::vector<std::string> kCnHeader = {"ID", "identificateur", "plaque", "vrac", "smi"};

void inventory_fixture() {
  const auto start = std::chrono::steady_clock::now();
  const auto t = parse_csvm_file(fixture("inventory.csvm")).table;
  const auto elapsed = std::chrono::steady_clock::now() - start;
  require(t.title == "Chemical inventory", "title");
  require(t.column_count() == 5, "column count");
  require(t.row_count() == 6, "row count");
  require(get_column(t, "masse_exacte").cells[0] == "181.19293", "cell (0, masse_exacte)");
  require(elapsed < std::chrono::seconds(1), "runtime >= 1 s");
}

void dictionary_model() {
  const auto d = load_dictionary(load_fixture("multi_system_dict.csvm"));
  require(d.set_names == std::vector<std::string>{"SYS1", "SYS2", "SYS1_UK"}, "set names");
  const auto hit = resolve(d, "numero", "SYS2");
  require(hit.has_value(), "numero not resolved");
  require(hit->target == "ID" && hit->type_label == "NUMERIC" && hit->width_label == "10", "resolved entry");
}

void end_to_end_hoffmann() {
  const auto out = apply_filter(load_fixture("hoffmann.csvm"), load_dictionary(load_fixture("dictionary_test1.csvm")), "CN");
  require(out.header == kCnHeader, "header");
  require(out.row_count() == 15, "row count");
  require(serialize_csvm(out) == read_file(fixture("hofmann_test1.csvm")), "bytes differ from golden");
}

void strong_mode_equivalence() {
  const auto data = load_fixture("hoffmann.csvm");
  const auto dict1 = load_dictionary(load_fixture("dictionary_test1.csvm"));
  const auto dict2 = load_dictionary(load_fixture("dictionary_test2.csvm"));
  FilterOptions strong;
  strong.strong = true;
  require(apply_filter(data, dict2, "CN", strong) == apply_filter(data, dict1, "CN"), "dict2/strong != dict1");

  Gen gen(404);
  const std::vector<std::string> pool = {"n0", "n1", "n2", "n3", "n4", "n5"};
  const std::vector<std::string> dheader = {"LOCAL", "LOCAL2", "CN", "#TYPE", "#WIDTH"};
  for (int i = 0; i < 1000; ++i) {
    std::vector<Row> explicit_rows, blank_rows;
    std::vector<std::string> local;
    const auto n = 1 + gen.below(6);
    for (std::size_t r = 0; r < n; ++r) {
      const auto src = gen.pick(pool);
      local.push_back(src);
      const bool remove = gen.coin(0.4);
      const auto keep_as = gen.pick(pool) + "_cn";
      const auto alt = gen.pick(pool);
      explicit_rows.push_back({src, alt, remove ? "__DEL__" : keep_as, "#TEXT", "#10"});
      blank_rows.push_back({src, alt, remove ? (gen.coin() ? "-" : "") : keep_as, "#TEXT", "#10"});
    }
    std::vector<std::string> header;
    const auto ncols = gen.below(6);
    for (std::size_t c = 0; c < ncols; ++c) header.push_back(gen.pick(local));
    const auto t = make_table(header, {Row(ncols, "v")});
    const auto a = apply_filter(t, load_dictionary(make_table(dheader, explicit_rows)), "CN");
    const auto b = apply_filter(t, load_dictionary(make_table(dheader, blank_rows)), "CN", strong);
    require(a == b, "generated pair " + std::to_string(i) + " differs");
  }
}

void round_trip() {
  for (const auto &path : csvm::testing::all_csvm_fixtures()) {
    ParseOptions lenient;
    lenient.lenient = true;
    const auto first = parse_csvm_file(path, lenient).table;
    const auto once = serialize_csvm(first);
    const auto again = parse_csvm(once).table;
    require(again == first, "parse(serialize(parse(F))) != parse(F) for " + path.filename().string());
    require(serialize_csvm(again) == once, "serialize/parse not a fixpoint for " + path.filename().string());
  }
  Gen gen(505);
  for (int i = 0; i < 1000; ++i) {
    const auto t = gen.table(6, 8, gen.coin());
    const auto bytes = serialize_csvm(t);
    const auto back = parse_csvm(bytes).table;
    require(back == t, "generated table " + std::to_string(i) + " did not round-trip");
    require(serialize_csvm(back) == bytes, "generated table " + std::to_string(i) + " not a fixpoint");
  }
}

void annotations() {
  const auto raw = read_file(fixture("annotated.csvm"));
  const auto t = parse_csvm(raw).table;
  require(t.row_count() == 6, "data rows");
  require(t.meta == std::vector<std::string>{"03/June/07"}, "meta");
  const auto out = serialize_csvm(t);
  std::istringstream in(raw);
  std::string line;
  std::size_t remarks = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] != '#') continue;
    require(out.find(line + "\n") != std::string::npos, "lost line: " + line);
    ++remarks;
  }
  require(remarks >= 20, "fixture has fewer remark lines than expected");
  require(out.find("#META\t03/June/07\n") != std::string::npos, "#META entry");
}

void algebra() {
  require(!intersect(load_fixture("test1.csvm"), load_fixture("disjoint.csvm")).has_value(), "disjoint intersect");
  std::ostringstream out, err;
  const int code = cli::run({"intersect", fixture("test1.csvm").string(), fixture("disjoint.csvm").string()}, out, err);
  require(code == 3, "CLI exit code " + std::to_string(code));
  require(out.str().find("None data found") != std::string::npos, "CLI message");

  Gen gen(707);
  for (int i = 0; i < 1000; ++i) {
    const auto a = gen.table();
    const auto b = gen.table();
    // Brute force: name sets from plain std::set operations.
    const auto an = name_set(a), bn = name_set(b);
    std::set<std::string> both, either = an;
    either.insert(bn.begin(), bn.end());
    for (const auto &n : an) {
      if (bn.count(n)) both.insert(n);
    }
    const auto u = union_of(a, b);
    require(name_set(u) == either, "union name set, pair " + std::to_string(i));
    require(u.row_count() == a.row_count() + b.row_count(), "union row count, pair " + std::to_string(i));
    const auto x = intersect(a, b);
    require(x.has_value() == !both.empty(), "intersect presence, pair " + std::to_string(i));
    if (x) {
      require(name_set(*x) == both, "intersect name set, pair " + std::to_string(i));
      require(x->row_count() == a.row_count() + b.row_count(), "intersect row count, pair " + std::to_string(i));
    }
  }
}

void sdf_pipeline() {
  const auto records = sdf::parse_sdf(read_file(fixture("collection.sdf")));
  require(records.size() >= 3, "fixture has fewer than 3 records");
  const auto table = sdf::sdf_to_csvm(records);
  const auto filtered = apply_filter(table, load_dictionary(load_fixture("dictionary_test1.csvm")), "CN");
  const auto out = sdf::csvm_to_sdf(filtered);
  require(out.size() == records.size(), "record count");
  const std::set<std::string> expected(kCnHeader.begin(), kCnHeader.end());
  for (const auto &rec : out) {
    std::set<std::string> keys;
    for (const auto &p : rec.properties) keys.insert(p.first);
    require(keys == expected, "record key set");
  }
}

void safety() {
  Gen gen(909);
  int checked = 0;
  for (int i = 0; i < 500; ++i) {
    auto t = gen.table(4, 4);
    if (t.row_count() == 0) continue;
    const auto r = gen.below(t.row_count());
    const auto c = gen.below(t.column_count());
    t.rows[r][c].insert(gen.below(t.rows[r][c].size() + 1), 1, t.separator);
    try {
      serialize_csvm(t);
      require(false, "serialized a cell holding the separator");
    } catch (const CsvmError &e) {
      require(e.code() == ErrorCode::kSeparatorInCell, "wrong error: " + std::string(e.what()));
    }
    ++checked;
  }
  require(checked > 100, "too few generated cases");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
      {"1 inventory fixture parses (title, 5x6, masse_exacte, < 1 s)", inventory_fixture},
      {"2 multi-system dictionary sets and resolve(numero, SYS2)", dictionary_model},
      {"3 hoffmann + dict1.CN == golden hofmann_test1 bytes", end_to_end_hoffmann},
      {"4 strong mode dict2 == dict1; 1000 generated pairs", strong_mode_equivalence},
      {"5 round-trip on every fixture and 1000 generated tables", round_trip},
      {"6 annotated file: remarks and #META preserved", annotations},
      {"7 algebra: disjoint intersect, CLI exit 3, 1000 pairs", algebra},
      {"8 SDF pipeline yields {ID, identificateur, plaque, vrac, smi}", sdf_pipeline},
      {"9 separator inside a cell raises SeparatorInCell", safety},
  };
  int failed = 0;
  for (const auto &[name, check] : criteria) {
    std::string why;
    try {
      check();
    } catch (const CriterionFailed &f) {
      why = f.why;
    } catch (const std::exception &e) {
      why = std::string("exception: ") + e.what();
    }
    if (why.empty()) {
      std::cout << "PASS  criterion " << name << '\n';
    } else {
      std::cout << "FAIL  criterion " << name << " -- " << why << '\n';
      ++failed;
    }
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
