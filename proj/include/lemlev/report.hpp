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
#include <cctype>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "lemlev/analyzer.hpp"
#include "lemlev/annotation.hpp"
#include "lemlev/markup.hpp"
#include "lemlev/readability.hpp"
#include "lemlev/textproc.hpp"

namespace lemlev {

/// A fully annotated text. `words` holds one entry per Word token of
/// `tokens`, in order.
struct AnnotatedDocument {
  std::string text;
  std::vector<Token> tokens;
  std::vector<WordAnnotation> words;
  ParsedMarkup markup;
};

/// parse_markup -> tokenize -> analyze -> most_likely -> level_of -> overrides.
/// Token offsets refer to `text` as given; removing bound runs never
/// changes which tokens are words, so word indices match the clean text.
inline AnnotatedDocument annotate(std::string_view text, const Analyzer& analyzer,
                                  const FreqTable& freq, const ReadabilityLexicon& lex) {
  AnnotatedDocument doc;
  doc.text = std::string(text);
  doc.markup = parse_markup(text);
  doc.tokens = tokenize(text);
  for (const Token& tok : doc.tokens) {
    if (!tok.is_word()) continue;
    WordAnnotation w;
    w.token = tok;
    const std::string_view body = tok.body();
    w.analyses = analyzer.analyze(body);
    w.chosen = most_likely(w.analyses, freq);
    w.computed_level = level_of(w.chosen, lex);
    if (auto it = doc.markup.overrides.find(doc.words.size()); it != doc.markup.overrides.end()) {
      w.override_level = level_from_grade(it->second.level);
    }
    w.effective_level = w.override_level.value_or(w.computed_level);
    w.type_key = normalize(body, analyzer.profile());
    doc.words.push_back(std::move(w));
  }
  return doc;
}

inline AnnotatedDocument annotate(std::string_view text, const MorphDB& db, const FreqTable& freq,
                                  const ReadabilityLexicon& lex, const NormProfile& profile) {
  return annotate(text, Analyzer(std::make_shared<const MorphDB>(db), profile), freq, lex);
}

struct DocumentReport {
  std::array<std::size_t, kLevelCount> token_counts{};
  std::array<std::size_t, kLevelCount> type_counts{};
  std::size_t total_tokens = 0;
  std::size_t total_types = 0;

  std::size_t tokens(Level l) const { return token_counts[level_index(l)]; }
  std::size_t types(Level l) const { return type_counts[level_index(l)]; }
};

/// Token space counts every word at its effective level. Type space
/// counts each distinct type_key once, at its first occurrence's level.
inline DocumentReport stats(std::span<const WordAnnotation> words) {
  DocumentReport r;
  std::unordered_set<std::string> seen;
  for (const WordAnnotation& w : words) {
    ++r.token_counts[level_index(w.effective_level)];
    ++r.total_tokens;
    if (seen.insert(w.type_key).second) {
      ++r.type_counts[level_index(w.effective_level)];
      ++r.total_types;
    }
  }
  return r;
}

/// Per-level colors used by the HTML emitter and the UI.
struct Palette {
  std::array<std::string, kLevelCount> colors = {"#2e7d32", "#9ccc65", "#fdd835", "#fb8c00",
                                                 "#e53935", "#7e57c2", "#9e9e9e"};

  const std::string& color(Level l) const { return colors[level_index(l)]; }

  /// Overrides from {"L1": "#rrggbb", ...}. Throws std::invalid_argument.
  void apply(const nlohmann::json& overrides) {
    if (!overrides.is_object()) throw std::invalid_argument("palette must be a JSON object");
    for (const auto& [key, value] : overrides.items()) {
      const auto level = level_from_string(key);
      if (!level) throw std::invalid_argument("unknown palette level: " + key);
      if (!value.is_string() || !is_hex_color(value.get<std::string>())) {
        throw std::invalid_argument("palette color for " + key + " must be #rrggbb");
      }
      colors[level_index(*level)] = value.get<std::string>();
    }
  }

  nlohmann::json to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (Level l : kAllLevels) j[std::string(to_string(l))] = color(l);
    return j;
  }

 private:
  static bool is_hex_color(const std::string& s) {
    if (s.size() != 7 || s[0] != '#') return false;
    for (std::size_t i = 1; i < 7; ++i) {
      if (!std::isxdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  }
};

enum class Format { Json, Tsv, Html };

class UnsupportedFormat : public std::invalid_argument {
 public:
  explicit UnsupportedFormat(const std::string& name)
      : std::invalid_argument("unsupported format: " + name) {}
};

inline Format format_from_string(std::string_view s) {
  if (s == "json") return Format::Json;
  if (s == "tsv") return Format::Tsv;
  if (s == "html") return Format::Html;
  throw UnsupportedFormat(std::string(s));
}

struct EmitOptions {
  Palette palette;
  /// Style of the markup runs in HTML output.
  SpanStyle markup_style = SpanStyle::Visible;
};

namespace detail {

inline nlohmann::json level_counts(const std::array<std::size_t, kLevelCount>& counts) {
  nlohmann::json j = nlohmann::json::object();
  for (Level l : kAllLevels) j[std::string(to_string(l))] = counts[level_index(l)];
  return j;
}

inline nlohmann::json nullable(const std::optional<Analysis>& a, std::string Analysis::*field) {
  if (!a) return nullptr;
  return (*a).*field;
}

inline std::string html_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&#39;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace detail

inline nlohmann::json word_json(const WordAnnotation& w) {
  nlohmann::json j;
  j["surface"] = std::string(w.token.body());
  j["start"] = w.token.body_start();
  j["end"] = w.token.end;
  j["lemma"] = detail::nullable(w.chosen, &Analysis::lemma);
  j["pos"] = detail::nullable(w.chosen, &Analysis::pos);
  j["diac"] = detail::nullable(w.chosen, &Analysis::diac);
  j["gloss"] = detail::nullable(w.chosen, &Analysis::gloss);
  j["computed_level"] = to_string(w.computed_level);
  j["override_level"] = w.override_level ? nlohmann::json(to_string(*w.override_level)) : nullptr;
  j["effective_level"] = to_string(w.effective_level);
  j["n_analyses"] = w.analyses.size();
  return j;
}

inline nlohmann::json stats_json(const DocumentReport& r) {
  return {{"tokens", detail::level_counts(r.token_counts)},
          {"types", detail::level_counts(r.type_counts)}};
}

inline nlohmann::json to_json(std::span<const WordAnnotation> words, const DocumentReport& r) {
  nlohmann::json j;
  j["words"] = nlohmann::json::array();
  for (const auto& w : words) j["words"].push_back(word_json(w));
  j["stats"] = stats_json(r);
  return j;
}

inline std::string emit_json(std::span<const WordAnnotation> words, const DocumentReport& r) {
  // nlohmann::json keeps object keys sorted, so dump() is canonical.
  return to_json(words, r).dump() + "\n";
}

inline std::string emit_tsv(std::span<const WordAnnotation> words) {
  std::string out =
      "surface\tstart\tend\tlemma\tpos\tdiac\tgloss\tcomputed_level\toverride_level\t"
      "effective_level\tn_analyses\n";
  for (const auto& w : words) {
    const auto field = [&](std::string Analysis::*f) { return w.chosen ? (*w.chosen).*f : std::string(); };
    out += std::string(w.token.body()) + '\t' + std::to_string(w.token.body_start()) + '\t' +
           std::to_string(w.token.end) + '\t' + field(&Analysis::lemma) + '\t' +
           field(&Analysis::pos) + '\t' + field(&Analysis::diac) + '\t' + field(&Analysis::gloss) +
           '\t' + std::string(to_string(w.computed_level)) + '\t' +
           (w.override_level ? std::string(to_string(*w.override_level)) : std::string()) + '\t' +
           std::string(to_string(w.effective_level)) + '\t' + std::to_string(w.analyses.size()) + '\n';
  }
  return out;
}

inline std::string emit_html(const AnnotatedDocument& doc, const DocumentReport& r,
                             const EmitOptions& opts = {}) {
  using detail::html_escape;
  std::ostringstream h;
  h << "<!DOCTYPE html>\n<html lang=\"ar\" dir=\"rtl\">\n<head>\n<meta charset=\"utf-8\">\n"
    << "<title>Readability report</title>\n<style>\n"
    << "body{font-family:sans-serif;margin:2em;line-height:2}\n"
    << ".doc{white-space:pre-wrap;font-size:1.4em}\n"
    << ".w{border-radius:3px;padding:0 2px}\n"
    << ".mk{unicode-bidi:isolate;direction:ltr;color:#555}\n"
    << ".mk.min{font-size:1pt}\n"
    << ".chart{display:flex;gap:2em;direction:ltr;margin-top:2em}\n"
    << ".bars{display:flex;align-items:flex-end;gap:6px;height:160px;border-bottom:1px solid #333}\n"
    << ".bar{width:36px;text-align:center;font-size:.8em;color:#000}\n";
  for (Level l : kAllLevels) {
    h << ".lv-" << to_string(l) << "{background-color:" << opts.palette.color(l) << "}\n";
  }
  h << "</style>\n</head>\n<body>\n<main class=\"doc\">";

  const std::u32string cps = utf8::decode(doc.text);
  std::size_t word = 0;
  for (const Token& tok : doc.tokens) {
    if (!tok.is_word()) {
      h << html_escape(tok.surface);
      continue;
    }
    const WordAnnotation& w = doc.words[word];
    const std::string level(to_string(w.effective_level));
    h << "<span class=\"w lv-" << level << "\" data-index=\"" << word << "\" data-level=\"" << level
      << "\"";
    if (w.chosen) h << " title=\"" << html_escape(w.chosen->lemma + " / " + w.chosen->pos) << "\"";
    h << ">";
    if (tok.markup_len > 0) {
      const std::string run = utf8::encode(std::u32string_view(cps).substr(tok.start, tok.markup_len));
      const bool bound = doc.markup.overrides.contains(word);
      h << "<span class=\"mk" << (!bound ? " inert" : "")
        << (bound && opts.markup_style == SpanStyle::Minimized ? " min" : "") << "\">"
        << html_escape(run) << "</span>";
    }
    h << html_escape(tok.body()) << "</span>";
    ++word;
  }
  h << "</main>\n<section class=\"chart\">\n";

  const auto chart = [&](const char* title, const std::array<std::size_t, kLevelCount>& counts,
                         std::size_t total) {
    h << "<figure><figcaption>" << title << " (" << total << ")</figcaption><div class=\"bars\">";
    for (Level l : kAllLevels) {
      const std::size_t c = counts[level_index(l)];
      const std::size_t pct = total == 0 ? 0 : (c * 100 + total / 2) / total;
      h << "<div class=\"bar lv-" << to_string(l) << "\" style=\"height:" << pct
        << "%\" title=\"" << to_string(l) << ": " << c << "\" data-count=\"" << c << "\">" << c
        << "</div>";
    }
    h << "</div></figure>\n";
  };
  chart("Tokens", r.token_counts, r.total_tokens);
  chart("Types", r.type_counts, r.total_types);
  h << "</section>\n</body>\n</html>\n";
  return h.str();
}

inline std::string emit(const AnnotatedDocument& doc, const DocumentReport& r, Format format,
                        const EmitOptions& opts = {}) {
  switch (format) {
    case Format::Json: return emit_json(doc.words, r);
    case Format::Tsv: return emit_tsv(doc.words);
    case Format::Html: return emit_html(doc, r, opts);
  }
  throw UnsupportedFormat("?");
}

}  // namespace lemlev
