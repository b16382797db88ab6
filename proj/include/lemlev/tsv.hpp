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

// Line-oriented TSV reading shared by every resource loader.

#include <charconv>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lemlev/error.hpp"
#include "lemlev/utf8.hpp"

namespace lemlev::tsv {

struct Row {
  std::size_t line = 0;
  std::vector<std::string> fields;
};

inline std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t pos = 0;
  while (true) {
    const std::size_t tab = line.find('\t', pos);
    if (tab == std::string_view::npos) {
      fields.emplace_back(line.substr(pos));
      break;
    }
    fields.emplace_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
  return fields;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw LoadError(LoadError::Kind::MissingFile, path.string(), 0, "cannot open file");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Parses TSV content. Blank lines and lines starting with '#' are skipped.
/// Every data row must have exactly `columns` fields.
inline std::vector<Row> parse(std::string_view content, std::size_t columns,
                              const std::string& file_label) {
  if (content.starts_with("\xEF\xBB\xBF")) {
    throw LoadError(LoadError::Kind::MalformedRow, file_label, 1, "byte order mark not allowed");
  }
  std::vector<Row> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < content.size()) {
    std::size_t nl = content.find('\n', pos);
    if (nl == std::string_view::npos) nl = content.size();
    std::string_view line = content.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (line.ends_with('\r')) line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    if (!utf8::is_valid(line)) {
      throw LoadError(LoadError::Kind::MalformedRow, file_label, line_no, "invalid UTF-8");
    }
    Row row{line_no, split(line)};
    if (row.fields.size() != columns) {
      throw LoadError(LoadError::Kind::MalformedRow, file_label, line_no,
                      "expected " + std::to_string(columns) + " columns, got " +
                          std::to_string(row.fields.size()));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::vector<Row> read(const std::filesystem::path& path, std::size_t columns) {
  return parse(read_file(path), columns, path.filename().string());
}

inline std::optional<long long> parse_int(std::string_view s) {
  long long v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) return std::nullopt;
  return v;
}

}  // namespace lemlev::tsv
