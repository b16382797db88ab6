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
#include <compare>
#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <functional>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "lemlev/error.hpp"
#include "lemlev/textproc.hpp"
#include "lemlev/tsv.hpp"

namespace lemlev {

/// A prefix or suffix. An empty `lookup` is a null affix.
struct AffixEntry {
  std::string lookup;
  std::string diac;
  std::string cat;
  std::string feats;

  auto operator<=>(const AffixEntry&) const = default;
};

struct StemEntry {
  std::string lookup;
  std::string diac;
  std::string cat;
  std::string lemma;
  std::string pos;
  std::string gloss;

  auto operator<=>(const StemEntry&) const = default;
};

/// Affix length bounds in scalar values.
struct Limits {
  std::size_t max_prefix_len = 4;
  std::size_t max_suffix_len = 6;

  auto operator<=>(const Limits&) const = default;
};

/// A set of allowed category pairs.
class CompatTable {
 public:
  CompatTable() = default;
  explicit CompatTable(std::set<std::pair<std::string, std::string>> pairs)
      : pairs_(std::move(pairs)) {}

  bool allows(std::string_view left, std::string_view right) const {
    return pairs_.contains({std::string(left), std::string(right)});
  }
  void insert(std::string left, std::string right) {
    pairs_.emplace(std::move(left), std::move(right));
  }
  const std::set<std::pair<std::string, std::string>>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }

  bool operator==(const CompatTable&) const = default;

 private:
  std::set<std::pair<std::string, std::string>> pairs_;
};

/// The three lexicons and three compatibility tables of a
/// Buckwalter-style concatenative analyzer. Immutable once constructed.
class MorphDB {
 public:
  MorphDB() = default;

  /// Deduplicates identical rows and checks that every compat pair names
  /// known categories. Throws LoadError(DanglingCategory).
  MorphDB(std::vector<AffixEntry> prefixes, std::vector<StemEntry> stems,
          std::vector<AffixEntry> suffixes, CompatTable ab, CompatTable bc, CompatTable ac,
          Limits limits = {})
      : prefixes_(dedup(std::move(prefixes))),
        stems_(dedup(std::move(stems))),
        suffixes_(dedup(std::move(suffixes))),
        ab_(std::move(ab)),
        bc_(std::move(bc)),
        ac_(std::move(ac)),
        limits_(limits) {
    const auto pcats = categories(prefixes_);
    const auto scats = categories(stems_);
    const auto xcats = categories(suffixes_);
    check(ab_, pcats, scats, "compat_ab.tsv");
    check(bc_, scats, xcats, "compat_bc.tsv");
    check(ac_, pcats, xcats, "compat_ac.tsv");
  }

  const std::vector<AffixEntry>& prefixes() const noexcept { return prefixes_; }
  const std::vector<StemEntry>& stems() const noexcept { return stems_; }
  const std::vector<AffixEntry>& suffixes() const noexcept { return suffixes_; }
  const CompatTable& compat_ab() const noexcept { return ab_; }
  const CompatTable& compat_bc() const noexcept { return bc_; }
  const CompatTable& compat_ac() const noexcept { return ac_; }
  const Limits& limits() const noexcept { return limits_; }

  bool empty() const noexcept { return prefixes_.empty() && stems_.empty() && suffixes_.empty(); }

  bool operator==(const MorphDB&) const = default;

 private:
  template <class Entry>
  static std::vector<Entry> dedup(std::vector<Entry> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  }

  template <class Entry>
  static std::set<std::string> categories(const std::vector<Entry>& v) {
    std::set<std::string> cats;
    for (const auto& e : v) cats.insert(e.cat);
    return cats;
  }

  static void check(const CompatTable& table, const std::set<std::string>& left,
                    const std::set<std::string>& right, const char* file) {
    for (const auto& [a, b] : table.pairs()) {
      if (!left.contains(a)) throw LoadError(LoadError::Kind::DanglingCategory, file, 0, a);
      if (!right.contains(b)) throw LoadError(LoadError::Kind::DanglingCategory, file, 0, b);
    }
  }

  std::vector<AffixEntry> prefixes_;
  std::vector<StemEntry> stems_;
  std::vector<AffixEntry> suffixes_;
  CompatTable ab_;
  CompatTable bc_;
  CompatTable ac_;
  Limits limits_;
};

namespace detail {

inline void require_lookup(const std::string& lookup, const std::string& diac,
                           const std::string& file, std::size_t line) {
  if (normalize(diac, NormProfile::lookup()) != lookup) {
    throw LoadError(LoadError::Kind::MalformedRow, file, line,
                    "lookup '" + lookup + "' is not the undiacritized form of '" + diac + "'");
  }
}

inline std::vector<AffixEntry> load_affixes(const std::filesystem::path& path) {
  const std::string file = path.filename().string();
  std::vector<AffixEntry> out;
  for (auto& row : tsv::read(path, 4)) {
    AffixEntry e{std::move(row.fields[0]), std::move(row.fields[1]), std::move(row.fields[2]),
                 std::move(row.fields[3])};
    if (e.cat.empty()) throw LoadError(LoadError::Kind::MalformedRow, file, row.line, "empty category");
    require_lookup(e.lookup, e.diac, file, row.line);
    out.push_back(std::move(e));
  }
  return out;
}

inline std::vector<StemEntry> load_stems(const std::filesystem::path& path) {
  const std::string file = path.filename().string();
  std::vector<StemEntry> out;
  std::set<std::tuple<std::string, std::string, std::string, std::string>> keys;
  std::set<StemEntry> seen;
  for (auto& row : tsv::read(path, 6)) {
    auto& f = row.fields;
    StemEntry e{std::move(f[0]), std::move(f[1]), std::move(f[2]),
                std::move(f[3]), std::move(f[4]), std::move(f[5])};
    if (e.lookup.empty()) throw LoadError(LoadError::Kind::MalformedRow, file, row.line, "empty stem");
    if (e.cat.empty() || e.lemma.empty() || e.pos.empty()) {
      throw LoadError(LoadError::Kind::MalformedRow, file, row.line, "empty cat, lemma or pos");
    }
    require_lookup(e.lookup, e.diac, file, row.line);
    if (seen.contains(e)) continue;
    if (!keys.emplace(e.diac, e.cat, e.lemma, e.pos).second) {
      throw LoadError(LoadError::Kind::MalformedRow, file, row.line,
                      "duplicate (diac, cat, lemma, pos) with a different gloss");
    }
    seen.insert(e);
    out.push_back(std::move(e));
  }
  return out;
}

inline CompatTable load_compat(const std::filesystem::path& path) {
  CompatTable table;
  const std::string file = path.filename().string();
  for (auto& row : tsv::read(path, 2)) {
    if (row.fields[0].empty() || row.fields[1].empty()) {
      throw LoadError(LoadError::Kind::MalformedRow, file, row.line, "empty category");
    }
    table.insert(std::move(row.fields[0]), std::move(row.fields[1]));
  }
  return table;
}

inline Limits load_limits(const std::filesystem::path& path) {
  Limits limits;
  if (!std::filesystem::exists(path)) return limits;
  const std::string file = path.filename().string();
  for (auto& row : tsv::read(path, 2)) {
    const auto value = tsv::parse_int(row.fields[1]);
    if (!value || *value < 0) {
      throw LoadError(LoadError::Kind::MalformedRow, file, row.line, "limit must be a non-negative integer");
    }
    if (row.fields[0] == "max_prefix_len") {
      limits.max_prefix_len = static_cast<std::size_t>(*value);
    } else if (row.fields[0] == "max_suffix_len") {
      limits.max_suffix_len = static_cast<std::size_t>(*value);
    } else {
      throw LoadError(LoadError::Kind::MalformedRow, file, row.line, "unknown limit " + row.fields[0]);
    }
  }
  return limits;
}

}  // namespace detail

/// Loads prefixes.tsv, stems.tsv, suffixes.tsv, compat_{ab,bc,ac}.tsv and
/// the optional limits.tsv from `dir`.
inline MorphDB load_db(const std::filesystem::path& dir) {
  for (const char* name : {"prefixes.tsv", "stems.tsv", "suffixes.tsv", "compat_ab.tsv",
                           "compat_bc.tsv", "compat_ac.tsv"}) {
    if (!std::filesystem::is_regular_file(dir / name)) {
      throw LoadError(LoadError::Kind::MissingFile, name, 0, "not found in " + dir.string());
    }
  }
  return MorphDB(detail::load_affixes(dir / "prefixes.tsv"), detail::load_stems(dir / "stems.tsv"),
                 detail::load_affixes(dir / "suffixes.tsv"), detail::load_compat(dir / "compat_ab.tsv"),
                 detail::load_compat(dir / "compat_bc.tsv"), detail::load_compat(dir / "compat_ac.tsv"),
                 detail::load_limits(dir / "limits.tsv"));
}

struct DbWarning {
  enum class Kind { UnleveledLemma, UnusedCategory, MissingNullAffix };
  Kind kind;
  std::string subject;
  std::string message;
};

/// Reports UnleveledLemma for stems whose (lemma, pos) `has_level` rejects
/// (skipped when no predicate is given; proper nouns are exempt), and
/// UnusedCategory for each category no compat pair mentions.
inline std::vector<DbWarning> validate(
    const MorphDB& db,
    const std::function<bool(const std::string& lemma, const std::string& pos)>& has_level = {}) {
  std::vector<DbWarning> warnings;
  if (has_level) {
    std::set<std::pair<std::string, std::string>> reported;
    for (const auto& s : db.stems()) {
      if (s.pos == "noun_prop" || has_level(s.lemma, s.pos)) continue;
      if (reported.emplace(s.lemma, s.pos).second) {
        warnings.push_back({DbWarning::Kind::UnleveledLemma, s.lemma + "/" + s.pos,
                            "stem lemma " + s.lemma + " (" + s.pos + ") has no readability level"});
      }
    }
  }

  std::set<std::string> used_prefix, used_stem, used_suffix;
  for (const auto& [a, b] : db.compat_ab().pairs()) { used_prefix.insert(a); used_stem.insert(b); }
  for (const auto& [a, b] : db.compat_bc().pairs()) { used_stem.insert(a); used_suffix.insert(b); }
  for (const auto& [a, b] : db.compat_ac().pairs()) { used_prefix.insert(a); used_suffix.insert(b); }
  auto unused = [&](const auto& entries, const std::set<std::string>& used, const char* table) {
    std::set<std::string> reported;
    for (const auto& e : entries) {
      if (!used.contains(e.cat) && reported.insert(e.cat).second) {
        warnings.push_back({DbWarning::Kind::UnusedCategory, e.cat,
                            std::string(table) + " category " + e.cat + " is not used by any compat pair"});
      }
    }
  };
  unused(db.prefixes(), used_prefix, "prefix");
  unused(db.stems(), used_stem, "stem");
  unused(db.suffixes(), used_suffix, "suffix");

  if (!db.stems().empty()) {
    auto has_null = [](const std::vector<AffixEntry>& v) {
      return std::any_of(v.begin(), v.end(), [](const AffixEntry& e) { return e.lookup.empty(); });
    };
    if (!has_null(db.prefixes())) {
      warnings.push_back({DbWarning::Kind::MissingNullAffix, "prefix", "no null prefix entry"});
    }
    if (!has_null(db.suffixes())) {
      warnings.push_back({DbWarning::Kind::MissingNullAffix, "suffix", "no null suffix entry"});
    }
  }
  return warnings;
}

}  // namespace lemlev
