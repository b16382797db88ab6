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

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "lemlev/analyzer.hpp"
#include "lemlev/error.hpp"
#include "lemlev/tsv.hpp"

namespace lemlev {

/// Five graded levels plus two ungraded classes. Only L1..L5 are ordered.
enum class Level { L1 = 1, L2, L3, L4, L5, ProperNoun, Unknown };

inline constexpr std::array<Level, 7> kAllLevels = {Level::L1, Level::L2, Level::L3, Level::L4,
                                                     Level::L5, Level::ProperNoun, Level::Unknown};
inline constexpr std::size_t kLevelCount = kAllLevels.size();

constexpr bool is_graded(Level l) noexcept {
  return l >= Level::L1 && l <= Level::L5;
}

/// 1..5 for graded levels, nullopt otherwise.
constexpr std::optional<int> grade(Level l) noexcept {
  if (!is_graded(l)) return std::nullopt;
  return static_cast<int>(l);
}

constexpr std::size_t level_index(Level l) noexcept {
  return static_cast<std::size_t>(l) - 1;
}

/// Throws std::out_of_range outside 1..5.
inline Level level_from_grade(long long g) {
  if (g < 1 || g > 5) throw std::out_of_range("readability level must be in 1..5");
  return static_cast<Level>(g);
}

/// Strictly easier, for graded levels only.
constexpr bool easier(Level a, Level b) noexcept {
  return is_graded(a) && is_graded(b) && static_cast<int>(a) < static_cast<int>(b);
}

constexpr std::string_view to_string(Level l) noexcept {
  switch (l) {
    case Level::L1: return "L1";
    case Level::L2: return "L2";
    case Level::L3: return "L3";
    case Level::L4: return "L4";
    case Level::L5: return "L5";
    case Level::ProperNoun: return "ProperNoun";
    case Level::Unknown: return "Unknown";
  }
  return "Unknown";
}

inline std::optional<Level> level_from_string(std::string_view s) {
  for (Level l : kAllLevels) {
    if (to_string(l) == s) return l;
  }
  return std::nullopt;
}

inline constexpr std::string_view kProperNounPos = "noun_prop";

/// (lemma, pos) -> graded level.
class ReadabilityLexicon {
 public:
  using Key = std::pair<std::string, std::string>;

  /// Returns false if the key already maps to a different level.
  bool insert(std::string lemma, std::string pos, Level level) {
    if (!is_graded(level)) throw std::invalid_argument("lexicon levels must be L1..L5");
    auto [it, inserted] = levels_.emplace(Key{std::move(lemma), std::move(pos)}, level);
    return inserted || it->second == level;
  }

  std::optional<Level> find(const std::string& lemma, const std::string& pos) const {
    auto it = levels_.find({lemma, pos});
    if (it == levels_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const std::string& lemma, const std::string& pos) const {
    return levels_.contains({lemma, pos});
  }

  std::size_t size() const noexcept { return levels_.size(); }
  bool empty() const noexcept { return levels_.empty(); }
  const std::map<Key, Level>& entries() const noexcept { return levels_; }

 private:
  std::map<Key, Level> levels_;
};

/// Reads lexicon.tsv (lemma, pos, level).
inline ReadabilityLexicon load_lexicon(const std::filesystem::path& path) {
  if (!std::filesystem::is_regular_file(path)) {
    throw LoadError(LoadError::Kind::MissingFile, path.string(), 0, "lexicon not found");
  }
  const std::string file = path.filename().string();
  ReadabilityLexicon lex;
  for (auto& row : tsv::read(path, 3)) {
    auto& f = row.fields;
    if (f[0].empty() || f[1].empty()) {
      throw LoadError(LoadError::Kind::MalformedRow, file, row.line, "empty lemma or pos");
    }
    const auto level = tsv::parse_int(f[2]);
    if (!level) throw LoadError(LoadError::Kind::MalformedRow, file, row.line, "level is not an integer");
    if (*level < 1 || *level > 5) {
      throw LoadError(LoadError::Kind::LevelOutOfRange, file, row.line, "level " + f[2]);
    }
    if (!lex.insert(std::move(f[0]), std::move(f[1]), level_from_grade(*level))) {
      throw LoadError(LoadError::Kind::MalformedRow, file, row.line,
                      "conflicting level for an existing (lemma, pos)");
    }
  }
  return lex;
}

/// Proper nouns take precedence over the lexicon; misses are Unknown.
inline Level level_of(const std::string& lemma, const std::string& pos,
                      const ReadabilityLexicon& lex) {
  if (pos == kProperNounPos) return Level::ProperNoun;
  return lex.find(lemma, pos).value_or(Level::Unknown);
}

inline Level level_of(const std::optional<Analysis>& analysis, const ReadabilityLexicon& lex) {
  if (!analysis) return Level::Unknown;
  return level_of(analysis->lemma, analysis->pos, lex);
}

}  // namespace lemlev
