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
#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lemlev/morphdb.hpp"
#include "lemlev/textproc.hpp"
#include "lemlev/tsv.hpp"

namespace lemlev {

/// One morphological reading of a word.
struct Analysis {
  AffixEntry prefix;
  StemEntry stem;
  AffixEntry suffix;
  std::string diac;
  std::string lemma;
  std::string pos;
  std::string gloss;

  /// Identity used for deduplication.
  auto key() const {
    return std::tie(diac, lemma, pos, prefix.cat, stem.cat, suffix.cat);
  }
  bool operator==(const Analysis& o) const { return key() == o.key(); }
  bool operator<(const Analysis& o) const { return key() < o.key(); }
};

inline Analysis make_analysis(const AffixEntry& prefix, const StemEntry& stem,
                              const AffixEntry& suffix) {
  return Analysis{prefix, stem, suffix, prefix.diac + stem.diac + suffix.diac,
                  stem.lemma, stem.pos, stem.gloss};
}

struct Segmentation {
  std::string prefix;
  std::string stem;
  std::string suffix;

  auto operator<=>(const Segmentation&) const = default;
};

/// Every (prefix, stem, suffix) split of `word` with a non-empty stem and
/// affixes within `limits`, ordered by prefix length then suffix length.
inline std::vector<Segmentation> segmentations(std::string_view word, const Limits& limits) {
  const std::u32string cps = utf8::decode(word);
  const std::size_t n = cps.size();
  std::vector<Segmentation> out;
  if (n == 0) return out;
  const std::u32string_view v = cps;
  for (std::size_t p = 0; p <= std::min(limits.max_prefix_len, n - 1); ++p) {
    for (std::size_t s = 0; s <= std::min(limits.max_suffix_len, n - 1 - p); ++s) {
      out.push_back({utf8::encode(v.substr(0, p)), utf8::encode(v.substr(p, n - p - s)),
                     utf8::encode(v.substr(n - s))});
    }
  }
  return out;
}

/// Lemma/POS frequency counts for out-of-context MLE choice.
class FreqTable {
 public:
  FreqTable() = default;

  void set(std::string lemma, std::string pos, unsigned long long count) {
    counts_[{std::move(lemma), std::move(pos)}] = count;
  }
  /// Missing pairs read as 0.
  unsigned long long count(const std::string& lemma, const std::string& pos) const {
    auto it = counts_.find({lemma, pos});
    return it == counts_.end() ? 0 : it->second;
  }
  std::size_t size() const noexcept { return counts_.size(); }

 private:
  std::map<std::pair<std::string, std::string>, unsigned long long> counts_;
};

/// Reads freq.tsv (lemma, pos, count). A missing file yields an empty table.
inline FreqTable load_freq(const std::filesystem::path& path) {
  FreqTable table;
  if (!std::filesystem::exists(path)) return table;
  const std::string file = path.filename().string();
  for (auto& row : tsv::read(path, 3)) {
    const auto count = tsv::parse_int(row.fields[2]);
    if (!count || *count < 0) {
      throw LoadError(LoadError::Kind::MalformedRow, file, row.line, "count must be a non-negative integer");
    }
    table.set(std::move(row.fields[0]), std::move(row.fields[1]),
              static_cast<unsigned long long>(*count));
  }
  return table;
}

/// Indexes a MorphDB under a normalization profile and enumerates
/// analyses. The database is shared and never modified.
class Analyzer {
 public:
  explicit Analyzer(std::shared_ptr<const MorphDB> db, NormProfile profile = NormProfile::lookup())
      : db_(std::move(db)), profile_(profile) {
    for (std::size_t i = 0; i < db_->prefixes().size(); ++i) {
      prefixes_[key(db_->prefixes()[i].lookup)].push_back(i);
    }
    for (std::size_t i = 0; i < db_->stems().size(); ++i) {
      stems_[key(db_->stems()[i].lookup)].push_back(i);
    }
    for (std::size_t i = 0; i < db_->suffixes().size(); ++i) {
      suffixes_[key(db_->suffixes()[i].lookup)].push_back(i);
    }
  }

  const MorphDB& db() const noexcept { return *db_; }
  const NormProfile& profile() const noexcept { return profile_; }

  /// All compatible analyses of `word`, sorted and deduplicated.
  /// An empty result means the word is out of vocabulary.
  std::vector<Analysis> analyze(std::string_view word) const {
    std::vector<Analysis> out;
    const std::u32string cps = normalize_codepoints(utf8::decode(word), profile_);
    const std::size_t n = cps.size();
    if (n == 0) return out;
    const std::u32string_view v = cps;
    const Limits& limits = db_->limits();
    for (std::size_t p = 0; p <= std::min(limits.max_prefix_len, n - 1); ++p) {
      const auto* pre = find(prefixes_, utf8::encode(v.substr(0, p)));
      if (pre == nullptr) continue;
      for (std::size_t s = 0; s <= std::min(limits.max_suffix_len, n - 1 - p); ++s) {
        const auto* suf = find(suffixes_, utf8::encode(v.substr(n - s)));
        if (suf == nullptr) continue;
        const auto* stm = find(stems_, utf8::encode(v.substr(p, n - p - s)));
        if (stm == nullptr) continue;
        combine(*pre, *stm, *suf, out);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  using Index = std::unordered_map<std::string, std::vector<std::size_t>>;

  std::string key(const std::string& lookup) const { return normalize(lookup, profile_); }

  static const std::vector<std::size_t>* find(const Index& index, const std::string& k) {
    auto it = index.find(k);
    return it == index.end() ? nullptr : &it->second;
  }

  void combine(const std::vector<std::size_t>& pre, const std::vector<std::size_t>& stm,
               const std::vector<std::size_t>& suf, std::vector<Analysis>& out) const {
    const MorphDB& db = *db_;
    for (std::size_t a : pre) {
      const AffixEntry& prefix = db.prefixes()[a];
      for (std::size_t b : stm) {
        const StemEntry& stem = db.stems()[b];
        if (!db.compat_ab().allows(prefix.cat, stem.cat)) continue;
        for (std::size_t c : suf) {
          const AffixEntry& suffix = db.suffixes()[c];
          if (!db.compat_bc().allows(stem.cat, suffix.cat)) continue;
          if (!db.compat_ac().allows(prefix.cat, suffix.cat)) continue;
          out.push_back(make_analysis(prefix, stem, suffix));
        }
      }
    }
  }

  std::shared_ptr<const MorphDB> db_;
  NormProfile profile_;
  Index prefixes_;
  Index stems_;
  Index suffixes_;
};

/// Convenience form that indexes `db` for a single call.
inline std::vector<Analysis> analyze(std::string_view word, const MorphDB& db,
                                     const NormProfile& profile = NormProfile::lookup()) {
  return Analyzer(std::make_shared<const MorphDB>(db), profile).analyze(word);
}

namespace detail {
inline auto tie_order(const Analysis& a) {
  return std::tie(a.lemma, a.pos, a.diac, a.prefix.cat, a.stem.cat, a.suffix.cat);
}
}  // namespace detail

/// The analysis whose (lemma, pos) is most frequent. Ties go to the
/// lexicographically smallest (lemma, pos, diac), then categories.
inline std::optional<Analysis> most_likely(std::span<const Analysis> analyses,
                                           const FreqTable& freq) {
  const Analysis* best = nullptr;
  unsigned long long best_count = 0;
  for (const Analysis& a : analyses) {
    const unsigned long long c = freq.count(a.lemma, a.pos);
    if (best == nullptr || c > best_count || (c == best_count && detail::tie_order(a) < detail::tie_order(*best))) {
      best = &a;
      best_count = c;
    }
  }
  if (best == nullptr) return std::nullopt;
  return *best;
}

}  // namespace lemlev
