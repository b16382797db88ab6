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

#include <memory>

#include "lemlev/engine.hpp"
#include "support/docgen.hpp"

namespace lemlev_test {

/// Engine over the committed fixture resources, loaded once per process.
inline const lemlev::Engine& fixture_engine() {
  static const auto engine = std::make_shared<const lemlev::Engine>(
      lemlev::Engine::load(lemlev::ResourcePaths::from_dir(fixture_dir())));
  return *engine;
}

}  // namespace lemlev_test
