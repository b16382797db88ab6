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

// Minimal UTF-8 <-> UTF-32 conversion. Offsets throughout lemlev are
// Unicode scalar-value indices, so most text processing happens on
// std::u32string and is converted back at the edges.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lemlev::utf8 {

class DecodeError : public std::runtime_error {
 public:
  DecodeError(std::size_t byte_offset, const std::string& what)
      : std::runtime_error(what), byte_offset_(byte_offset) {}
  std::size_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

/// Decodes strict UTF-8 (no overlongs, no surrogates, no BOM stripping).
/// Throws DecodeError on the first invalid sequence.
inline std::u32string decode(std::string_view in) {
  std::u32string out;
  out.reserve(in.size());
  std::size_t i = 0;
  const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(in[k]); };
  while (i < in.size()) {
    const unsigned char b0 = byte(i);
    char32_t cp = 0;
    std::size_t len = 0;
    char32_t min = 0;
    if (b0 < 0x80) {
      out.push_back(b0);
      ++i;
      continue;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F; len = 2; min = 0x80;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F; len = 3; min = 0x800;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07; len = 4; min = 0x10000;
    } else {
      throw DecodeError(i, "invalid UTF-8 lead byte at offset " + std::to_string(i));
    }
    if (i + len > in.size()) {
      throw DecodeError(i, "truncated UTF-8 sequence at offset " + std::to_string(i));
    }
    for (std::size_t k = 1; k < len; ++k) {
      const unsigned char b = byte(i + k);
      if ((b & 0xC0) != 0x80) {
        throw DecodeError(i, "invalid UTF-8 continuation at offset " + std::to_string(i + k));
      }
      cp = (cp << 6) | (b & 0x3F);
    }
    if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      throw DecodeError(i, "invalid UTF-8 scalar value at offset " + std::to_string(i));
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

inline void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline std::string encode(std::u32string_view in) {
  std::string out;
  out.reserve(in.size() * 2);
  for (char32_t cp : in) append(out, cp);
  return out;
}

inline bool is_valid(std::string_view in) {
  try {
    decode(in);
    return true;
  } catch (const DecodeError&) {
    return false;
  }
}

/// Number of scalar values in a valid UTF-8 string.
inline std::size_t length(std::string_view in) {
  std::size_t n = 0;
  for (char c : in) {
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
  }
  return n;
}

}  // namespace lemlev::utf8
