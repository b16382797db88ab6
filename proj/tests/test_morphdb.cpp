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

#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "lemlev/analyzer.hpp"
#include "lemlev/morphdb.hpp"
#include "lemlev/readability.hpp"
#include "support/docgen.hpp"

namespace lemlev {
namespace {

namespace fs = std::filesystem;

class TempFixture {
 public:
  TempFixture() {
    dir_ = fs::temp_directory_path() /
           ("lemlev_db_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    for (const auto& entry : fs::directory_iterator(lemlev_test::fixture_dir())) {
      fs::copy_file(entry.path(), dir_ / entry.path().filename());
    }
  }
  ~TempFixture() { fs::remove_all(dir_); }

  const fs::path& dir() const { return dir_; }
  void append(const std::string& file, const std::string& line) const {
    std::ofstream(dir_ / file, std::ios::app) << line << '\n';
  }
  void write(const std::string& file, const std::string& content) const {
    std::ofstream(dir_ / file, std::ios::trunc) << content;
  }

 private:
  fs::path dir_;
};

TEST(LoadDb, FixtureRowCounts) {
  // Data rows in the committed fixture files.
  const MorphDB db = load_db(lemlev_test::fixture_dir());
  EXPECT_EQ(db.prefixes().size(), 18u);
  EXPECT_EQ(db.stems().size(), 77u);
  EXPECT_EQ(db.suffixes().size(), 15u);
  EXPECT_EQ(db.compat_ab().size(), 22u);
  EXPECT_EQ(db.compat_bc().size(), 14u);
  EXPECT_EQ(db.compat_ac().size(), 28u);
  EXPECT_EQ(db.limits().max_prefix_len, 4u);
  EXPECT_EQ(db.limits().max_suffix_len, 6u);
}

TEST(LoadDb, Deterministic) {
  EXPECT_EQ(load_db(lemlev_test::fixture_dir()), load_db(lemlev_test::fixture_dir()));
}

TEST(LoadDb, MissingCompatFile) {
  TempFixture t;
  fs::remove(t.dir() / "compat_ac.tsv");
  try {
    load_db(t.dir());
    FAIL() << "expected LoadError";
  } catch (const LoadError& e) {
    EXPECT_EQ(e.kind(), LoadError::Kind::MissingFile);
    EXPECT_EQ(e.file(), "compat_ac.tsv");
  }
}

TEST(LoadDb, StemRowWithThreeColumns) {
  TempFixture t;
  t.append("stems.tsv", "قلم\tقَلَم\tN");
  try {
    load_db(t.dir());
    FAIL() << "expected LoadError";
  } catch (const LoadError& e) {
    EXPECT_EQ(e.kind(), LoadError::Kind::MalformedRow);
    EXPECT_EQ(e.file(), "stems.tsv");
    EXPECT_EQ(e.line(), 79u);  // header comment + 77 rows + the new one
  }
}

TEST(LoadDb, DuplicateIdenticalRowsCollapse) {
  TempFixture t;
  t.append("stems.tsv", "بيت\tبَيْت\tN\tبَيْت\tnoun\thouse");
  t.append("compat_ab.tsv", "Pref-0\tN");
  const MorphDB db = load_db(t.dir());
  EXPECT_EQ(db.stems().size(), 77u);
  EXPECT_EQ(db.compat_ab().size(), 22u);
}

TEST(LoadDb, ConflictingStemGlossIsMalformed) {
  TempFixture t;
  t.append("stems.tsv", "بيت\tبَيْت\tN\tبَيْت\tnoun\thome");
  EXPECT_THROW(load_db(t.dir()), LoadError);
}

TEST(LoadDb, LookupMustMatchDiacritizedForm) {
  TempFixture t;
  t.append("stems.tsv", "بيوت\tبَيْت\tN\tبَيْت\tnoun\thouses");
  try {
    load_db(t.dir());
    FAIL();
  } catch (const LoadError& e) {
    EXPECT_EQ(e.kind(), LoadError::Kind::MalformedRow);
  }
}

TEST(LoadDb, DanglingCategory) {
  TempFixture t;
  t.append("compat_bc.tsv", "N\tNSuff-Dual");
  try {
    load_db(t.dir());
    FAIL();
  } catch (const LoadError& e) {
    EXPECT_EQ(e.kind(), LoadError::Kind::DanglingCategory);
    EXPECT_EQ(e.file(), "compat_bc.tsv");
    EXPECT_NE(std::string(e.what()).find("NSuff-Dual"), std::string::npos);
  }
}

TEST(LoadDb, LimitsOverride) {
  TempFixture t;
  t.write("limits.tsv", "max_prefix_len\t2\nmax_suffix_len\t3\n");
  const MorphDB db = load_db(t.dir());
  EXPECT_EQ(db.limits().max_prefix_len, 2u);
  EXPECT_EQ(db.limits().max_suffix_len, 3u);
  t.write("limits.tsv", "max_infix_len\t2\n");
  EXPECT_THROW(load_db(t.dir()), LoadError);
}

TEST(LoadDb, LimitsFileOptional) {
  TempFixture t;
  fs::remove(t.dir() / "limits.tsv");
  EXPECT_EQ(load_db(t.dir()).limits(), Limits{});
}

TEST(LoadDb, ByteOrderMarkRejected) {
  TempFixture t;
  t.write("prefixes.tsv", "\xEF\xBB\xBF\t\tPref-0\t\n");
  EXPECT_THROW(load_db(t.dir()), LoadError);
}

TEST(Validate, ConsistentFixtureHasNoWarnings) {
  const MorphDB db = load_db(lemlev_test::fixture_dir());
  const ReadabilityLexicon lex = load_lexicon(lemlev_test::fixture_dir() / "lexicon.tsv");
  const auto warnings = validate(db, [&](const std::string& lemma, const std::string& pos) {
    return lex.contains(lemma, pos);
  });
  for (const auto& w : warnings) ADD_FAILURE() << w.message;
  EXPECT_TRUE(warnings.empty());
}

TEST(Validate, OrphanStemCategory) {
  TempFixture t;
  t.append("stems.tsv", "قلم\tقَلَم\tNx\tقَلَم\tnoun\tpen");
  const auto warnings = validate(load_db(t.dir()));
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_EQ(warnings[0].kind, DbWarning::Kind::UnusedCategory);
  EXPECT_EQ(warnings[0].subject, "Nx");
}

TEST(Validate, UnleveledLemma) {
  const MorphDB db = load_db(lemlev_test::fixture_dir());
  ReadabilityLexicon empty;
  const auto warnings = validate(db, [&](const std::string& l, const std::string& p) {
    return empty.contains(l, p);
  });
  EXPECT_FALSE(warnings.empty());
  for (const auto& w : warnings) EXPECT_EQ(w.kind, DbWarning::Kind::UnleveledLemma);
}

TEST(Validate, EmptyDb) { EXPECT_TRUE(validate(MorphDB{}).empty()); }

// Every stem is analyzable on its own, with its own lemma.
TEST(MorphDbProperty, BareStemsAnalyzable) {
  auto db = std::make_shared<const MorphDB>(load_db(lemlev_test::fixture_dir()));
  const Analyzer analyzer(db);
  for (const StemEntry& e : db->stems()) {
    const auto analyses = analyzer.analyze(e.lookup);
    const bool found = std::any_of(analyses.begin(), analyses.end(),
                                   [&](const Analysis& a) { return a.lemma == e.lemma; });
    EXPECT_TRUE(found) << e.lookup << " " << e.cat;
  }
}

}  // namespace
}  // namespace lemlev
