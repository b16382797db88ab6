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

#include <optional>
#include <string>
#include <vector>

#include "lemlev/analyzer.hpp"
#include "lemlev/readability.hpp"
#include "lemlev/textproc.hpp"

namespace lemlev {

/// Per-word result of the annotation pipeline.
struct WordAnnotation {
  Token token;
  std::vector<Analysis> analyses;
  std::optional<Analysis> chosen;
  Level computed_level = Level::Unknown;
  std::optional<Level> override_level;
  Level effective_level = Level::Unknown;
  /// Normalized body; the identity of the word type.
  std::string type_key;
};

}  // namespace lemlev
