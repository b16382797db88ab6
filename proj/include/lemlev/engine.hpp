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

#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lemlev/analyzer.hpp"
#include "lemlev/markup.hpp"
#include "lemlev/morphdb.hpp"
#include "lemlev/readability.hpp"
#include "lemlev/report.hpp"
#include "lemlev/suggest.hpp"

namespace lemlev {

struct ResourcePaths {
  std::filesystem::path morph_dir;
  std::filesystem::path lexicon;
  std::filesystem::path freq;
  std::filesystem::path relations;

  /// Standard layout: the six morphology tables plus lexicon.tsv,
  /// freq.tsv and relations.tsv in one directory.
  static ResourcePaths from_dir(const std::filesystem::path& dir) {
    return {dir, dir / "lexicon.tsv", dir / "freq.tsv", dir / "relations.tsv"};
  }
};

/// Analyses of one word grouped by level, for the word-level view.
struct WordLookup {
  std::string surface;
  std::vector<std::pair<Level, std::vector<Analysis>>> groups;
  std::optional<Analysis> chosen;
  SuggestionGroups suggestions;

  std::size_t analysis_count() const {
    std::size_t n = 0;
    for (const auto& [level, list] : groups) n += list.size();
    return n;
  }
};

/// Immutable bundle of loaded resources. Safe to share across threads.
class Engine {
 public:
  Engine(std::shared_ptr<const MorphDB> db, FreqTable freq, ReadabilityLexicon lex,
         RelationDB relations, NormProfile profile = NormProfile::lookup())
      : analyzer_(db, profile),
        db_(std::move(db)),
        freq_(std::move(freq)),
        lex_(std::move(lex)),
        relations_(std::move(relations)) {}

  /// Throws LoadError.
  static Engine load(const ResourcePaths& paths, NormProfile profile = NormProfile::lookup()) {
    auto db = std::make_shared<const MorphDB>(load_db(paths.morph_dir));
    return Engine(std::move(db), load_freq(paths.freq), load_lexicon(paths.lexicon),
                  load_relations(paths.relations), profile);
  }

  const Analyzer& analyzer() const noexcept { return analyzer_; }
  const MorphDB& db() const noexcept { return *db_; }
  const FreqTable& freq() const noexcept { return freq_; }
  const ReadabilityLexicon& lexicon() const noexcept { return lex_; }
  const RelationDB& relations() const noexcept { return relations_; }
  const NormProfile& profile() const noexcept { return analyzer_.profile(); }

  AnnotatedDocument annotate(std::string_view text) const {
    return lemlev::annotate(text, analyzer_, freq_, lex_);
  }

  /// JSON report of `text`; the exact bytes served by /v1/analyze.
  std::string analyze_json(std::string_view text) const {
    const AnnotatedDocument doc = annotate(text);
    return emit_json(doc.words, stats(doc.words));
  }

  WordLookup lookup(std::string_view surface) const {
    WordLookup out;
    out.surface = std::string(surface);
    const std::vector<Analysis> analyses = analyzer_.analyze(surface);
    std::map<Level, std::vector<Analysis>> by_level;
    for (const Analysis& a : analyses) by_level[level_of(a.lemma, a.pos, lex_)].push_back(a);
    for (auto& [level, list] : by_level) out.groups.emplace_back(level, std::move(list));
    out.chosen = most_likely(analyses, freq_);
    if (out.chosen) out.suggestions = related(out.chosen->lemma, out.chosen->pos, relations_, lex_);
    return out;
  }

  nlohmann::json resource_counts() const {
    return {{"prefixes", db_->prefixes().size()},   {"stems", db_->stems().size()},
            {"suffixes", db_->suffixes().size()},   {"compat_ab", db_->compat_ab().size()},
            {"compat_bc", db_->compat_bc().size()}, {"compat_ac", db_->compat_ac().size()},
            {"lexicon", lex_.size()},               {"freq", freq_.size()},
            {"relations", relations_.edge_count()}};
  }

 private:
  Analyzer analyzer_;
  std::shared_ptr<const MorphDB> db_;
  FreqTable freq_;
  ReadabilityLexicon lex_;
  RelationDB relations_;
};

inline nlohmann::json analysis_json(const Analysis& a) {
  return {{"lemma", a.lemma},
          {"pos", a.pos},
          {"diac", a.diac},
          {"gloss", a.gloss},
          {"prefix", a.prefix.diac},
          {"stem", a.stem.diac},
          {"suffix", a.suffix.diac},
          {"cats", {a.prefix.cat, a.stem.cat, a.suffix.cat}}};
}

inline nlohmann::json lookup_json(const WordLookup& w) {
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& [level, list] : w.groups) {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& a : list) items.push_back(analysis_json(a));
    groups.push_back({{"level", to_string(level)}, {"analyses", items}});
  }
  nlohmann::json suggestions = nlohmann::json::object();
  for (Relation rel : kAllRelations) {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& s : w.suggestions[rel]) {
      items.push_back({{"lemma", s.lemma}, {"pos", s.pos}, {"level", to_string(s.level)}});
    }
    suggestions[std::string(to_string(rel))] = items;
  }
  return {{"surface", w.surface},
          {"groups", groups},
          {"chosen", w.chosen ? analysis_json(*w.chosen) : nlohmann::json(nullptr)},
          {"suggestions", suggestions}};
}

}  // namespace lemlev
