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

#include <string>
#include <utility>
#include <vector>

namespace lemlev_test {

// The twenty example lemmas of the five-level scheme, by level.
inline const std::vector<std::vector<std::pair<std::string, std::string>>> kLeveledExamples = {
    {{"بَيْت", "noun"}, {"كَبير", "adj"}, {"أكَلَ", "verb"}, {"عَلى", "prep"}},
    {{"ذَهَب", "noun"}, {"أُسْطُواني", "adj"}, {"خَدَعَ", "verb"}, {"إذا", "conj"}},
    {{"رِئة", "noun"}, {"مُعادَلة", "noun"}, {"مُوَحَّد", "adj"}, {"أَغْرى", "verb"}},
    {{"اِقْتِصاد", "noun"}, {"طُمَأنينة", "noun"}, {"راقِي", "adj"}, {"نَكَثَ", "verb"}},
    {{"أَدَمة", "noun"}, {"مِطْياف", "noun"}, {"لَوْذَع", "adj"}, {"شُعَبيّ", "adj"}},
};

}  // namespace lemlev_test
