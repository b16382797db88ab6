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
#include <stdexcept>
#include <string>
#include <utility>

namespace lemlev {

/// Failure while loading a resource file.
class LoadError : public std::runtime_error {
 public:
  enum class Kind {
    MissingFile,
    MalformedRow,
    DanglingCategory,
    LevelOutOfRange,
    UnknownRelation,
  };

  LoadError(Kind kind, std::string file, std::size_t line, const std::string& detail)
      : std::runtime_error(format(kind, file, line, detail)),
        kind_(kind),
        file_(std::move(file)),
        line_(line) {}

  Kind kind() const noexcept { return kind_; }
  const std::string& file() const noexcept { return file_; }
  /// 1-based; 0 when the error is not tied to a line.
  std::size_t line() const noexcept { return line_; }

  static const char* kind_name(Kind kind) noexcept {
    switch (kind) {
      case Kind::MissingFile: return "MissingFile";
      case Kind::MalformedRow: return "MalformedRow";
      case Kind::DanglingCategory: return "DanglingCategory";
      case Kind::LevelOutOfRange: return "LevelOutOfRange";
      case Kind::UnknownRelation: return "UnknownRelation";
    }
    return "LoadError";
  }

 private:
  static std::string format(Kind kind, const std::string& file, std::size_t line,
                            const std::string& detail) {
    std::string msg = kind_name(kind);
    msg += ": ";
    msg += file;
    if (line > 0) msg += ":" + std::to_string(line);
    if (!detail.empty()) msg += ": " + detail;
    return msg;
  }

  Kind kind_;
  std::string file_;
  std::size_t line_;
};

}  // namespace lemlev
