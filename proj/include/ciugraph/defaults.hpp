// Copyright 2026 ciugraph authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CIUGRAPH_DEFAULTS_HPP_
#define CIUGRAPH_DEFAULTS_HPP_

#include <string_view>

// Compiled-in default configuration. Used whenever no explicit file and no
// CIUGRAPH_CONFIG_DIR override is given, so the library works out of the
// box without any data directory.
namespace ciugraph::defaults {

std::string_view lexicon_json();
std::string_view coordinates_json();
std::string_view lemma_rules_json();

}  // namespace ciugraph::defaults

#endif  // CIUGRAPH_DEFAULTS_HPP_
