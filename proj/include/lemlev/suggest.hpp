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

#include <algorithm>
#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "lemlev/error.hpp"
#include "lemlev/readability.hpp"
#include "lemlev/tsv.hpp"

namespace lemlev {

enum class Relation { Synonym, Antonym, Hypernym, Hyponym };

inline constexpr std::array<Relation, 4> kAllRelations = {Relation::Synonym, Relation::Antonym,
                                                          Relation::Hypernym, Relation::Hyponym};

constexpr std::string_view to_string(Relation r) noexcept {
  switch (r) {
    case Relation::Synonym: return "synonym";
    case Relation::Antonym: return "antonym";
    case Relation::Hypernym: return "hypernym";
    case Relation::Hyponym: return "hyponym";
  }
  return "synonym";
}

inline std::optional<Relation> relation_from_string(std::string_view s) {
  for (Relation r : kAllRelations) {
    if (to_string(r) == s) return r;
  }
  return std::nullopt;
}

using LemmaPos = std::pair<std::string, std::string>;

/// Directed relation edges keyed by source (lemma, pos).
class RelationDB {
 public:
  using Targets = std::array<std::vector<LemmaPos>, kAllRelations.size()>;

  /// Returns false for a duplicate edge. Synonym self-loops throw
  /// std::invalid_argument.
  bool add(const LemmaPos& source, Relation rel, LemmaPos target) {
    if (rel == Relation::Synonym && source == target) {
      throw std::invalid_argument("synonym self-loop");
    }
    auto& list = edges_[source][static_cast<std::size_t>(rel)];
    if (std::find(list.begin(), list.end(), target) != list.end()) return false;
    list.push_back(std::move(target));
    ++edge_count_;
    return true;
  }

  /// nullptr for an unknown source.
  const Targets* find(const LemmaPos& source) const {
    auto it = edges_.find(source);
    return it == edges_.end() ? nullptr : &it->second;
  }

  std::size_t source_count() const noexcept { return edges_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

 private:
  std::map<LemmaPos, Targets> edges_;
  std::size_t edge_count_ = 0;
};

/// Reads relations.tsv (source_lemma, source_pos, relation, target_lemma, target_pos).
inline RelationDB load_relations(const std::filesystem::path& path) {
  if (!std::filesystem::is_regular_file(path)) {
    throw LoadError(LoadError::Kind::MissingFile, path.string(), 0, "relations not found");
  }
  const std::string file = path.filename().string();
  RelationDB db;
  for (auto& row : tsv::read(path, 5)) {
    auto& f = row.fields;
    for (const auto& field : f) {
      if (field.empty()) throw LoadError(LoadError::Kind::MalformedRow, file, row.line, "empty field");
    }
    const auto rel = relation_from_string(f[2]);
    if (!rel) throw LoadError(LoadError::Kind::UnknownRelation, file, row.line, f[2]);
    try {
      db.add({f[0], f[1]}, *rel, {f[3], f[4]});
    } catch (const std::invalid_argument& e) {
      throw LoadError(LoadError::Kind::MalformedRow, file, row.line, e.what());
    }
  }
  return db;
}

struct Suggestion {
  std::string lemma;
  std::string pos;
  Relation relation = Relation::Synonym;
  Level level = Level::Unknown;

  bool operator==(const Suggestion&) const = default;
};

/// Suggestions grouped by relation, indexed by static_cast<size_t>(Relation).
struct SuggestionGroups {
  std::array<std::vector<Suggestion>, kAllRelations.size()> groups;

  const std::vector<Suggestion>& operator[](Relation r) const {
    return groups[static_cast<std::size_t>(r)];
  }
  bool empty() const {
    return std::all_of(groups.begin(), groups.end(), [](const auto& g) { return g.empty(); });
  }
};

namespace detail {
// Graded levels first, easiest first; then ProperNoun, then Unknown.
inline int suggestion_rank(Level l) noexcept { return static_cast<int>(l); }
}  // namespace detail

/// Related lemmas with their levels, sorted easiest first within each
/// relation. A `max_level` drops graded targets harder than it; ungraded
/// targets are kept.
inline SuggestionGroups related(const std::string& lemma, const std::string& pos,
                                const RelationDB& db, const ReadabilityLexicon& lex,
                                std::optional<Level> max_level = std::nullopt) {
  SuggestionGroups out;
  const auto* targets = db.find({lemma, pos});
  if (targets == nullptr) return out;
  for (Relation rel : kAllRelations) {
    auto& group = out.groups[static_cast<std::size_t>(rel)];
    for (const auto& [tl, tp] : (*targets)[static_cast<std::size_t>(rel)]) {
      if (rel == Relation::Synonym && tl == lemma && tp == pos) continue;
      const Level level = level_of(tl, tp, lex);
      if (max_level && is_graded(level) && is_graded(*max_level) && easier(*max_level, level)) {
        continue;
      }
      group.push_back({tl, tp, rel, level});
    }
    std::sort(group.begin(), group.end(), [](const Suggestion& a, const Suggestion& b) {
      return std::tuple(detail::suggestion_rank(a.level), a.lemma, a.pos) <
             std::tuple(detail::suggestion_rank(b.level), b.lemma, b.pos);
    });
  }
  return out;
}

}  // namespace lemlev
