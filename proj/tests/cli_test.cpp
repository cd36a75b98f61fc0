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

#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "csvm/io.hpp"
#include "csvm/sdf.hpp"
#include "test_util.hpp"

namespace csvm::cli {
namespace {

using csvm::testing::fixture;
namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string &name) { return fixture(name).string(); }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto *info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / ("csvm_cli_" + std::string(info->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override {
    std::error_code ec;
    fs::remove_all(dir_, ec);
  }
  std::string tmp(const std::string &name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, Validate) {
  auto r = run_cli({"validate", fx("inventory.csvm")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("0 error(s)"), std::string::npos);

  r = run_cli({"validate", fx("invalid/duplicate_header.csvm")});
  EXPECT_EQ(r.code, kInvalid);
  EXPECT_EQ(r.err, "ERROR line 5: duplicate #HEADER (previous at line 2)\n");

  EXPECT_EQ(run_cli({"validate", tmp("nope.csvm")}).code, kIoFailure);
}

TEST_F(CliTest, ValidateStrictPromotesWarnings) {
  write_file(tmp("w.csvm"), "1\n#HEADER\ta\n");
  EXPECT_EQ(run_cli({"validate", tmp("w.csvm")}).code, kOk);
  const auto r = run_cli({"validate", "--strict", tmp("w.csvm")});
  EXPECT_EQ(r.code, kInvalid);
  EXPECT_NE(r.err.find("WARNING line 0: missing #TYPE"), std::string::npos);
}

TEST_F(CliTest, Info) {
  auto r = run_cli({"info", fx("multi_system_dict.csvm")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("sets: SYS1, SYS2, SYS1_UK\n"), std::string::npos);
  r = run_cli({"info", fx("metadata_only.csvm")});
  EXPECT_NE(r.out.find("rows: 0\n"), std::string::npos);
  EXPECT_EQ(r.out.find("sets:"), std::string::npos);
  r = run_cli({"info", fx("annotated.csvm")});
  EXPECT_NE(r.out.find("annotations: 20\n"), std::string::npos);
}

TEST_F(CliTest, Dump) {
  auto r = run_cli({"dump", fx("inventory.csvm")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, dump(csvm::testing::load_fixture("inventory.csvm")));
  r = run_cli({"dump", fx("inventory.csvm"), "--offset", "2", "--limit", "3"});
  EXPECT_NE(r.out.find("[Tryptophane]"), std::string::npos);
  EXPECT_EQ(r.out.find("[Tyrosine]"), std::string::npos);
  EXPECT_EQ(r.out.find("[Ph-Choline]"), std::string::npos);
}

TEST_F(CliTest, FilterMatchesGolden) {
  const auto golden = read_file(fixture("hofmann_test1.csvm"));
  auto r = run_cli({"filter", fx("hoffmann.csvm"), "--dict", fx("dictionary_test1.csvm"), "--set", "CN"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, golden);
  r = run_cli({"filter", fx("hoffmann.csvm"), "--dict", fx("dictionary_test2.csvm"), "--set", "CN", "--strong", "-o",
               tmp("out.csvm")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(read_file(tmp("out.csvm")), golden);
}

TEST_F(CliTest, FilterUnknownSetCopiesInput) {
  const auto r = run_cli({"filter", fx("hoffmann.csvm"), "--dict", fx("dictionary_test1.csvm"), "--set", "XX"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, serialize_csvm(csvm::testing::load_fixture("hoffmann.csvm")));
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST_F(CliTest, FilterOptions) {
  auto r = run_cli({"filter", fx("inventory.csvm"), "--dict", fx("multi_system_dict.csvm"), "--set", "SYS2",
                    "--apply-standard"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("#WIDTH\t10\t50\t50\t100\t10"), std::string::npos);
  r = run_cli({"filter", fx("hoffmann.csvm"), "--dict", fx("dictionary_test1.csvm"), "--set", "CN", "--delcol", "x"});
  EXPECT_NE(r.out.find("__DEL__"), std::string::npos);
  EXPECT_EQ(run_cli({"filter", fx("hoffmann.csvm"), "--set", "CN"}).code, kInvalid);
}

TEST_F(CliTest, Algebra) {
  auto r = run_cli({"intersect", fx("test1.csvm"), fx("disjoint.csvm")});
  EXPECT_EQ(r.code, kEmptyResult);
  EXPECT_EQ(r.out, "None data found\n");

  r = run_cli({"intersect", fx("test1.csvm"), fx("test2.csvm")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("#HEADER\tname\tamount\n"), std::string::npos);

  r = run_cli({"union", fx("inventory.csvm"), fx("inventory.csvm")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(parse_csvm(r.out).table.row_count(), 12u);

  EXPECT_EQ(run_cli({"cat", fx("test1.csvm"), fx("test2.csvm")}).code, kInvalid);
  r = run_cli({"cat", fx("test1.csvm"), fx("test1.csvm")});
  EXPECT_EQ(parse_csvm(r.out).table.row_count(), 4u);
}

TEST_F(CliTest, SdfPipeline) {
  ASSERT_EQ(run_cli({"from-sdf", fx("collection.sdf"), "-o", tmp("c.csvm")}).code, kOk);
  ASSERT_EQ(run_cli({"filter", tmp("c.csvm"), "--dict", fx("dictionary_test1.csvm"), "--set", "CN", "-o",
                     tmp("f.csvm")})
                .code,
            kOk);
  const auto r = run_cli({"to-sdf", tmp("f.csvm")});
  ASSERT_EQ(r.code, kOk);
  const auto recs = sdf::parse_sdf(r.out);
  ASSERT_EQ(recs.size(), 3u);
  for (const auto &rec : recs) {
    std::set<std::string> keys;
    for (const auto &p : rec.properties) keys.insert(p.first);
    EXPECT_EQ(keys, (std::set<std::string>{"ID", "identificateur", "plaque", "vrac", "smi"}));
  }
}

TEST_F(CliTest, SdfEdgeCases) {
  write_file(tmp("empty.sdf"), "");
  const auto r = run_cli({"from-sdf", tmp("empty.sdf")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "#TITLE\t\n#HEADER\n#TYPE\n#WIDTH\n");
  EXPECT_EQ(run_cli({"to-sdf", fx("hofmann_test1.csvm"), "--structure-col", "nope"}).code, kInvalid);
  const auto with_structure = run_cli({"from-sdf", fx("collection.sdf"), "--structure-col", "molfile"});
  EXPECT_NE(with_structure.out.find("\\nM  END"), std::string::npos);
}

TEST_F(CliTest, DeterministicAndInputsUntouched) {
  const auto before = read_file(fixture("hoffmann.csvm"));
  const std::vector<std::string> args = {"filter", fx("hoffmann.csvm"), "--dict", fx("dictionary_test2.csvm"), "--set",
                                         "CN", "--strong"};
  EXPECT_EQ(run_cli(args).out, run_cli(args).out);
  EXPECT_EQ(read_file(fixture("hoffmann.csvm")), before);
}

TEST_F(CliTest, SeparatorAndUsage) {
  write_file(tmp("c.csvm"), "1,x\n#HEADER,a,b\n#TYPE,T,T\n#WIDTH,1,1\n");
  auto r = run_cli({"info", "--sep", "comma", tmp("c.csvm")});
  EXPECT_NE(r.out.find("columns: 2"), std::string::npos);
  EXPECT_EQ(run_cli({"info", "--sep", "ab", tmp("c.csvm")}).code, kInvalid);
  EXPECT_EQ(run_cli({}).code, kInvalid);
  EXPECT_EQ(run_cli({"bogus"}).code, kInvalid);
  EXPECT_EQ(run_cli({"--help"}).code, kOk);
  EXPECT_EQ(parse_separator("tab"), '\t');
  EXPECT_EQ(parse_separator("semicolon"), ';');
  EXPECT_EQ(parse_separator("|"), '|');
  EXPECT_THROW(parse_separator("#"), CsvmError);
}

}  // namespace
}  // namespace csvm::cli
