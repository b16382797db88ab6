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

// Inline `#i#` readability overrides and the four markup modes.
//
// A run `#digits#` binds to a word when it sits directly in front of the
// word's first letter and does not itself follow a word character or a
// '#'. Levels outside 1..5 leave the run in place as inert text and
// produce a diagnostic. Digits may be ASCII or Arabic-Indic.
//
// Plain text cannot carry the Minimized style; it is reported on the
// returned spans only.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lemlev/annotation.hpp"
#include "lemlev/readability.hpp"
#include "lemlev/textproc.hpp"
#include "lemlev/utf8.hpp"

namespace lemlev {

enum class DigitScript { Ascii, ArabicIndic };
enum class SpanStyle { Visible, Minimized };
enum class MarkupMode { Show, Minimize, Hide, Delete };

constexpr std::string_view to_string(DigitScript s) noexcept {
  return s == DigitScript::Ascii ? "ascii" : "arabic-indic";
}
constexpr std::string_view to_string(SpanStyle s) noexcept {
  return s == SpanStyle::Visible ? "visible" : "minimized";
}
constexpr std::string_view to_string(MarkupMode m) noexcept {
  switch (m) {
    case MarkupMode::Show: return "show";
    case MarkupMode::Minimize: return "minimize";
    case MarkupMode::Hide: return "hide";
    case MarkupMode::Delete: return "delete";
  }
  return "show";
}

inline std::optional<MarkupMode> markup_mode_from_string(std::string_view s) {
  for (MarkupMode m : {MarkupMode::Show, MarkupMode::Minimize, MarkupMode::Hide, MarkupMode::Delete}) {
    if (to_string(m) == s) return m;
  }
  return std::nullopt;
}

inline std::optional<DigitScript> digit_script_from_string(std::string_view s) {
  if (s == "ascii") return DigitScript::Ascii;
  if (s == "arabic-indic" || s == "arabic") return DigitScript::ArabicIndic;
  return std::nullopt;
}

struct MarkupSpan {
  int level = 1;
  DigitScript digit_script = DigitScript::ArabicIndic;
  /// Offsets of the `#i#` run, in scalar values.
  std::size_t start = 0;
  std::size_t end = 0;
  SpanStyle style = SpanStyle::Visible;

  bool operator==(const MarkupSpan&) const = default;
};

struct MarkupDiagnostic {
  std::size_t offset = 0;
  std::string run;
  std::string message;
};

struct ParsedMarkup {
  std::string clean_text;
  /// Word-token index -> override.
  std::map<std::size_t, MarkupSpan> overrides;
  /// LevelOutOfRange reports for inert runs.
  std::vector<MarkupDiagnostic> diagnostics;
};

/// "#٥#" or "#5#".
inline std::string format_run(int level, DigitScript script) {
  if (level < 1 || level > 5) throw std::out_of_range("markup level must be in 1..5");
  std::u32string run = U"#";
  run.push_back(script == DigitScript::Ascii ? U'0' + level : 0x0660 + level);
  run.push_back(U'#');
  return utf8::encode(run);
}

namespace detail {

struct RunValue {
  long long value = 0;
  DigitScript script = DigitScript::ArabicIndic;
};

// `run` includes both '#'. Values beyond 6 digits saturate.
inline RunValue run_value(std::u32string_view run) {
  RunValue rv;
  rv.script = chars::digit_value(run[1]) >= 0 && run[1] < 0x80 ? DigitScript::Ascii
                                                               : DigitScript::ArabicIndic;
  for (std::size_t k = 1; k + 1 < run.size(); ++k) {
    rv.value = std::min<long long>(rv.value * 10 + chars::digit_value(run[k]), 1000000);
  }
  return rv;
}

struct ScannedMarkup {
  std::u32string cps;
  std::vector<Token> tokens;
  /// Parallel to the Word tokens; set when the token's run is a valid override.
  std::vector<std::optional<MarkupSpan>> word_overrides;
  std::vector<std::size_t> word_tokens;
  std::vector<MarkupDiagnostic> diagnostics;
};

inline ScannedMarkup scan(std::string_view text) {
  ScannedMarkup sm;
  sm.cps = utf8::decode(text);
  sm.tokens = tokenize_codepoints(sm.cps);
  for (std::size_t t = 0; t < sm.tokens.size(); ++t) {
    const Token& tok = sm.tokens[t];
    if (!tok.is_word()) continue;
    sm.word_tokens.push_back(t);
    std::optional<MarkupSpan> span;
    if (tok.markup_len > 0) {
      const std::u32string_view run = std::u32string_view(sm.cps).substr(tok.start, tok.markup_len);
      const RunValue rv = run_value(run);
      if (rv.value >= 1 && rv.value <= 5) {
        span = MarkupSpan{static_cast<int>(rv.value), rv.script, tok.start,
                          tok.start + tok.markup_len, SpanStyle::Visible};
      } else {
        sm.diagnostics.push_back({tok.start, utf8::encode(run),
                                  "LevelOutOfRange: markup level must be in 1..5"});
      }
    }
    sm.word_overrides.push_back(span);
  }
  return sm;
}

}  // namespace detail

/// Strips bound, valid runs from `text` and records them as overrides.
/// Throws utf8::DecodeError on invalid UTF-8.
inline ParsedMarkup parse_markup(std::string_view text) {
  detail::ScannedMarkup sm = detail::scan(text);
  ParsedMarkup out;
  out.diagnostics = std::move(sm.diagnostics);
  std::u32string clean;
  clean.reserve(sm.cps.size());
  std::size_t word = 0;
  for (const Token& tok : sm.tokens) {
    std::size_t from = tok.start;
    if (tok.is_word()) {
      if (const auto& span = sm.word_overrides[word]) {
        out.overrides.emplace(word, *span);
        from = span->end;
      }
      ++word;
    }
    clean.append(sm.cps, from, tok.end - from);
  }
  out.clean_text = utf8::encode(clean);
  return out;
}

/// Inserts a run in front of each overridden word of `clean`. Words that
/// already start with a run, or whose preceding character is '#', cannot
/// carry a bound override; callers keep such input out.
inline std::string emit_markup(std::string_view clean,
                               const std::map<std::size_t, MarkupSpan>& overrides) {
  const std::u32string cps = utf8::decode(clean);
  std::string out;
  std::size_t word = 0;
  for (const Token& tok : tokenize_codepoints(cps)) {
    if (tok.is_word()) {
      if (auto it = overrides.find(word); it != overrides.end()) {
        out += format_run(it->second.level, it->second.digit_script);
      }
      ++word;
    }
    out += tok.surface;
  }
  return out;
}

struct MarkupResult {
  std::string text;
  /// Runs present in `text`, with offsets into `text`.
  std::vector<MarkupSpan> spans;
};

/// Applies a markup mode. `annotations` must hold one entry per Word
/// token of `text`, in order (as produced by annotating `text`).
inline MarkupResult apply_mode(std::string_view text, MarkupMode mode,
                               std::span<const WordAnnotation> annotations,
                               DigitScript emit_script = DigitScript::ArabicIndic) {
  const detail::ScannedMarkup sm = detail::scan(text);
  if (annotations.size() != sm.word_tokens.size()) {
    throw std::invalid_argument("annotation count does not match word count");
  }
  const std::u32string_view cps = sm.cps;
  std::u32string out;
  MarkupResult result;
  const auto emit_span = [&](std::u32string_view run, int level, DigitScript script, SpanStyle style) {
    const std::size_t start = out.size();
    out.append(run);
    result.spans.push_back({level, script, start, out.size(), style});
  };

  std::size_t word = 0;
  for (const Token& tok : sm.tokens) {
    if (!tok.is_word()) {
      out.append(cps.substr(tok.start, tok.end - tok.start));
      continue;
    }
    const auto& span = sm.word_overrides[word];
    const WordAnnotation& ann = annotations[word];
    ++word;
    const std::u32string_view body = cps.substr(tok.body_start(), tok.end - tok.body_start());
    const std::u32string_view run = cps.substr(tok.start, tok.markup_len);

    switch (mode) {
      case MarkupMode::Show:
        if (span) {
          emit_span(run, span->level, span->digit_script, SpanStyle::Visible);
        } else if (tok.markup_len > 0) {
          out.append(run);  // inert run, left alone
        } else if (const auto g = grade(ann.effective_level)) {
          emit_span(utf8::decode(format_run(*g, emit_script)), *g, emit_script, SpanStyle::Visible);
        }
        break;
      case MarkupMode::Minimize:
        if (span) {
          emit_span(run, span->level, span->digit_script, SpanStyle::Minimized);
        } else {
          out.append(run);
        }
        break;
      case MarkupMode::Hide:
        if (span) {
          if (grade(ann.computed_level) != span->level) {
            emit_span(run, span->level, span->digit_script, SpanStyle::Minimized);
          }
        } else {
          out.append(run);
        }
        break;
      case MarkupMode::Delete:
        if (!span) out.append(run);
        break;
    }
    out.append(body);
  }
  result.text = utf8::encode(out);
  return result;
}

namespace detail {

inline std::string assign_where(std::string_view text, int level, DigitScript script,
                                const auto& selected, std::size_t* count) {
  const std::u32string cps = utf8::decode(text);
  const std::u32string run = utf8::decode(format_run(level, script));
  std::u32string out;
  std::size_t word = 0;
  std::size_t n = 0;
  for (const Token& tok : tokenize_codepoints(cps)) {
    if (tok.is_word() && selected(word++, tok)) {
      out += run;
      out.append(cps, tok.body_start(), tok.end - tok.body_start());
      ++n;
    } else {
      out.append(cps, tok.start, tok.end - tok.start);
    }
  }
  if (count != nullptr) *count = n;
  return utf8::encode(out);
}

}  // namespace detail

/// Sets the override of one word, replacing any run it already carries.
/// Throws std::out_of_range if `word_index` is not a Word token index.
inline std::string assign_level(std::string_view text, int level, std::size_t word_index,
                                DigitScript script = DigitScript::ArabicIndic) {
  std::size_t n = 0;
  std::string out = detail::assign_where(
      text, level, script, [&](std::size_t i, const Token&) { return i == word_index; }, &n);
  if (n == 0) throw std::out_of_range("occurrence index out of range");
  return out;
}

/// Sets the override of every word whose normalized body equals that of `surface`.
inline std::string assign_level_all(std::string_view text, int level, std::string_view surface,
                                    const NormProfile& profile,
                                    DigitScript script = DigitScript::ArabicIndic,
                                    std::size_t* assigned = nullptr) {
  const std::string target = normalize(surface, profile);
  return detail::assign_where(
      text, level, script,
      [&](std::size_t, const Token& tok) { return normalize(tok.body(), profile) == target; },
      assigned);
}

}  // namespace lemlev
