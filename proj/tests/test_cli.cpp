// Copyright 2026 The lemlev Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>
#include <httplib.h>
#include <json.hpp>

#include "support/docgen.hpp"
#include "support/engine_fixture.hpp"
#include "support/process.hpp"

namespace {

namespace fs = std::filesystem;
using lemlev_test::run;
using lemlev_test::shell_quote;

std::string res() { return "--resources " + shell_quote(lemlev_test::fixture_dir().string()); }
std::string doc(int i) {
  char name[16];
  std::snprintf(name, sizeof name, "doc%02d.txt", i);
  return shell_quote((lemlev_test::test_data_dir() / "docs" / name).string());
}

TEST(Cli, AnalyzeJsonMatchesEngine) {
  const auto r = run(res() + " analyze " + doc(2));
  ASSERT_EQ(r.exit_code, 0);
  const std::string text = lemlev_test::read_text(lemlev_test::test_data_dir() / "docs" / "doc02.txt");
  EXPECT_EQ(r.out, lemlev_test::fixture_engine().analyze_json(text));
}

TEST(Cli, AnalyzeTsvAndHtml) {
  const auto tsv = run(res() + " analyze " + doc(1) + " --format tsv");
  ASSERT_EQ(tsv.exit_code, 0);
  EXPECT_EQ(tsv.out.rfind("surface\tstart\tend", 0), 0u);
  const auto html = run(res() + " analyze " + doc(1) + " --format html");
  ASSERT_EQ(html.exit_code, 0);
  EXPECT_NE(html.out.find("<html"), std::string::npos);
}

TEST(Cli, AnalyzeToFile) {
  const fs::path out = fs::temp_directory_path() / "lemlev_cli_out.json";
  const auto r = run(res() + " analyze " + doc(1) + " --out " + shell_quote(out.string()));
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NO_THROW(nlohmann::json::parse(lemlev_test::read_text(out)));
  fs::remove(out);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run(res() + " analyze /nonexistent/input.txt").exit_code, 2);
  EXPECT_EQ(run("--resources /nonexistent analyze " + doc(1)).exit_code, 3);
  EXPECT_EQ(run(res() + " markup " + doc(1) + " --mode shout").exit_code, 4);
  EXPECT_EQ(run(res() + " analyze " + doc(1) + " --format pdf").exit_code, 4);
  EXPECT_EQ(run(res() + " --profile strict analyze " + doc(1)).exit_code, 4);
  EXPECT_EQ(run(res() + " --digits roman analyze " + doc(1)).exit_code, 4);
  EXPECT_EQ(run("frobnicate").exit_code, 4);
  EXPECT_EQ(run("").exit_code, 4);
}

TEST(Cli, DiagnosticFormat) {
  const auto r = run(res() + " analyze /nonexistent/input.txt", true);
  EXPECT_EQ(r.out.rfind("2\t", 0), 0u);
}

TEST(Cli, MarkupModes) {
  const fs::path in = fs::temp_directory_path() / "lemlev_cli_markup.txt";
  { std::ofstream(in) << "#١#بيت كبير #٤#رئة"; }
  const std::string f = shell_quote(in.string());
  EXPECT_EQ(run(res() + " markup " + f + " --mode delete").out, "بيت كبير رئة");
  EXPECT_EQ(run(res() + " markup " + f + " --mode show").out, "#١#بيت #١#كبير #٤#رئة");
  EXPECT_EQ(run(res() + " --digits ascii markup " + f + " --mode show").out, "#١#بيت #1#كبير #٤#رئة");
  EXPECT_EQ(run(res() + " markup " + f + " --mode hide").out, "بيت كبير #٤#رئة");
  EXPECT_EQ(run(res() + " markup " + f + " --mode minimize").out, "#١#بيت كبير #٤#رئة");
  fs::remove(in);
}

TEST(Cli, Lookup) {
  const auto r = run(res() + " lookup فردها");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("فَرَّد"), std::string::npos);
  EXPECT_NE(r.out.find("most likely: رَدّ"), std::string::npos);
  const auto s = run(res() + " lookup انحلت");
  EXPECT_NE(s.out.find("synonym  ذاب  [verb]  L1"), std::string::npos);
  const auto oov = run(res() + " lookup حاسوب");
  ASSERT_EQ(oov.exit_code, 0);
  EXPECT_NE(oov.out.find("no analyses"), std::string::npos);
}

TEST(Cli, ServeBindFailure) {
  httplib::Server blocker;
  const int port = blocker.bind_to_any_port("127.0.0.1");
  ASSERT_GT(port, 0);
  const auto r = run(res() + " serve --host 127.0.0.1 --port " + std::to_string(port));
  EXPECT_EQ(r.exit_code, 5);
}

TEST(Cli, ServeBadResourcesExits3) {
  const auto r = run("--resources /nonexistent serve --host 127.0.0.1 --port 0");
  EXPECT_EQ(r.exit_code, 3);
}

}  // namespace
