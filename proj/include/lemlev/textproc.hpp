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
#include <string>
#include <string_view>
#include <vector>

#include "lemlev/utf8.hpp"

namespace lemlev {

namespace chars {

constexpr char32_t kTatweel = 0x0640;

// Letters, diacritics and tatweel. Tatweel already lies inside the
// letter block; it is listed separately for clarity.
constexpr bool is_arabic_letter(char32_t c) noexcept {
  return (c >= 0x0621 && c <= 0x064A) || c == 0x0671;
}
constexpr bool is_diacritic(char32_t c) noexcept {
  return (c >= 0x064B && c <= 0x0652) || c == 0x0670;
}
constexpr bool is_word_char(char32_t c) noexcept {
  return is_arabic_letter(c) || is_diacritic(c) || c == kTatweel;
}

constexpr bool is_space(char32_t c) noexcept {
  return (c >= 0x09 && c <= 0x0D) || c == 0x20 || c == 0x85 || c == 0xA0 ||
         c == 0x1680 || (c >= 0x2000 && c <= 0x200A) || c == 0x2028 ||
         c == 0x2029 || c == 0x202F || c == 0x205F || c == 0x3000;
}

/// Value of an ASCII or Arabic-Indic digit, or -1.
constexpr int digit_value(char32_t c) noexcept {
  if (c >= U'0' && c <= U'9') return static_cast<int>(c - U'0');
  if (c >= 0x0660 && c <= 0x0669) return static_cast<int>(c - 0x0660);
  return -1;
}

}  // namespace chars

enum class TokenKind { Word, NonWord };

/// A slice of the source text. Offsets are scalar-value indices.
///
/// A Word token may begin with a `#digits#` markup run; `markup_len`
/// counts the scalar values of that run (0 when absent). The word body
/// starts at `start + markup_len`.
struct Token {
  std::string surface;
  std::size_t start = 0;
  std::size_t end = 0;
  TokenKind kind = TokenKind::NonWord;
  std::size_t markup_len = 0;

  bool is_word() const noexcept { return kind == TokenKind::Word; }
  std::size_t body_start() const noexcept { return start + markup_len; }

  /// The word without any leading markup run.
  std::string_view body() const noexcept {
    std::string_view s = surface;
    // Markup runs are '#', ASCII digits (1 byte) or Arabic-Indic digits (2 bytes).
    std::size_t skipped = 0;
    std::size_t i = 0;
    while (skipped < markup_len && i < s.size()) {
      ++i;
      while (i < s.size() && (static_cast<unsigned char>(s[i]) & 0xC0) == 0x80) ++i;
      ++skipped;
    }
    return s.substr(i);
  }

  bool operator==(const Token&) const = default;
};

namespace detail {

/// Length of a `#digits#` run at `pos` (0 if none).
inline std::size_t markup_run_at(std::u32string_view cps, std::size_t pos) {
  if (pos >= cps.size() || cps[pos] != U'#') return 0;
  std::size_t j = pos + 1;
  while (j < cps.size() && chars::digit_value(cps[j]) >= 0) ++j;
  if (j == pos + 1 || j >= cps.size() || cps[j] != U'#') return 0;
  return j + 1 - pos;
}

/// Length of a markup run at `pos` that binds to the word following it.
/// Binding requires the run to start at a token boundary (not after a
/// word character or another '#') and to be directly followed by a word
/// character.
inline std::size_t bound_markup_at(std::u32string_view cps, std::size_t pos) {
  if (pos > 0 && (chars::is_word_char(cps[pos - 1]) || cps[pos - 1] == U'#')) return 0;
  const std::size_t len = markup_run_at(cps, pos);
  if (len == 0 || pos + len >= cps.size() || !chars::is_word_char(cps[pos + len])) return 0;
  return len;
}

}  // namespace detail

/// Splits text into Word and NonWord tokens that partition it exactly.
///
/// Word tokens are maximal runs of Arabic letters, diacritics and tatweel,
/// optionally led by a bound `#digits#` run. NonWord tokens are maximal
/// runs of whitespace, or maximal runs of anything else.
inline std::vector<Token> tokenize_codepoints(std::u32string_view cps) {
  std::vector<Token> tokens;
  const std::size_t n = cps.size();
  std::size_t i = 0;
  auto push = [&](std::size_t b, std::size_t e, TokenKind kind, std::size_t markup) {
    tokens.push_back(Token{utf8::encode(cps.substr(b, e - b)), b, e, kind, markup});
  };
  while (i < n) {
    const std::size_t markup = detail::bound_markup_at(cps, i);
    if (markup > 0 || chars::is_word_char(cps[i])) {
      std::size_t j = i + markup;
      while (j < n && chars::is_word_char(cps[j])) ++j;
      push(i, j, TokenKind::Word, markup);
      i = j;
    } else if (chars::is_space(cps[i])) {
      std::size_t j = i + 1;
      while (j < n && chars::is_space(cps[j])) ++j;
      push(i, j, TokenKind::NonWord, 0);
      i = j;
    } else {
      std::size_t j = i + 1;
      while (j < n && !chars::is_space(cps[j]) && !chars::is_word_char(cps[j]) &&
             detail::bound_markup_at(cps, j) == 0) {
        ++j;
      }
      push(i, j, TokenKind::NonWord, 0);
      i = j;
    }
  }
  return tokens;
}

/// Throws utf8::DecodeError on invalid UTF-8.
inline std::vector<Token> tokenize(std::string_view text) {
  return tokenize_codepoints(utf8::decode(text));
}

/// Orthographic normalization flags.
class NormProfile {
 public:
  constexpr NormProfile(bool strip_diacritics, bool strip_tatweel, bool normalize_alef,
                        bool normalize_ya, bool normalize_ta_marbuta) noexcept
      : strip_diacritics_(strip_diacritics),
        strip_tatweel_(strip_tatweel),
        normalize_alef_(normalize_alef),
        normalize_ya_(normalize_ya),
        normalize_ta_marbuta_(normalize_ta_marbuta) {}

  /// Exact-consonant matching used for dictionary keys.
  static constexpr NormProfile lookup() noexcept { return {true, true, false, false, false}; }
  /// Everything on.
  static constexpr NormProfile fuzzy() noexcept { return {true, true, true, true, true}; }

  constexpr bool strip_diacritics() const noexcept { return strip_diacritics_; }
  constexpr bool strip_tatweel() const noexcept { return strip_tatweel_; }
  constexpr bool normalize_alef() const noexcept { return normalize_alef_; }
  constexpr bool normalize_ya() const noexcept { return normalize_ya_; }
  constexpr bool normalize_ta_marbuta() const noexcept { return normalize_ta_marbuta_; }

  constexpr bool operator==(const NormProfile&) const noexcept = default;

 private:
  bool strip_diacritics_;
  bool strip_tatweel_;
  bool normalize_alef_;
  bool normalize_ya_;
  bool normalize_ta_marbuta_;
};

inline std::u32string normalize_codepoints(std::u32string_view in, const NormProfile& profile) {
  std::u32string out;
  out.reserve(in.size());
  for (char32_t c : in) {
    if (profile.strip_diacritics() && chars::is_diacritic(c)) continue;
    if (profile.strip_tatweel() && c == chars::kTatweel) continue;
    if (profile.normalize_alef() && (c == 0x0623 || c == 0x0625 || c == 0x0622 || c == 0x0671)) {
      c = 0x0627;
    } else if (profile.normalize_ya() && c == 0x0649) {
      c = 0x064A;
    } else if (profile.normalize_ta_marbuta() && c == 0x0629) {
      c = 0x0647;
    }
    out.push_back(c);
  }
  return out;
}

inline std::string normalize(std::string_view surface, const NormProfile& profile) {
  return utf8::encode(normalize_codepoints(utf8::decode(surface), profile));
}

/// Resolves "default"/"lookup" and "fuzzy". Throws std::invalid_argument otherwise.
inline NormProfile profile_by_name(std::string_view name) {
  if (name == "default" || name == "lookup") return NormProfile::lookup();
  if (name == "fuzzy") return NormProfile::fuzzy();
  throw std::invalid_argument("unknown normalization profile: " + std::string(name));
}

}  // namespace lemlev
