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

#ifndef CIUGRAPH_NORMALIZE_HPP_
#define CIUGRAPH_NORMALIZE_HPP_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ciugraph/chat.hpp"

namespace ciugraph {

// One lowercase, punctuation-free token. A hyphenated source word is emitted
// once in joined form; its parts travel along as alternates sharing the same
// token_index and are consulted only when the joined form finds no match.
struct Token {
  std::string surface;
  std::string lemma;
  int sentence_index = 0;
  int token_index = 0;
  std::vector<std::string> alt_surfaces;
  std::vector<std::string> alt_lemmas;
};

// Deterministic lemmatizer tables. The suffix rules are (suffix, replacement)
// pairs tried in order; the engine adds the standard guards: a minimum stem
// length with at least one vowel, the sibilant-stem condition for "es",
// the ss/us/is exclusions for "s", and undoubling plus silent-e restoration
// after "ing"/"ed".
struct LemmaRules {
  std::map<std::string, std::string> irregulars;
  std::vector<std::pair<std::string, std::string>> suffix_rules;
  std::set<std::string> protected_words;
};

// Built-in tables covering every inflection the shipped lexicon needs.
const LemmaRules& default_lemma_rules();

// Loads {"irregulars": {...}, "suffix_rules": [[pat, repl], ...],
// "protected": [...]}. Throws SchemaError.
LemmaRules load_lemma_rules(std::string_view json_text);

// surface must already be lowercase and punctuation-free.
std::string lemmatize(const std::string& surface, const LemmaRules& rules);

std::vector<Token> normalize(const Transcript& transcript,
                             const LemmaRules& rules);

}  // namespace ciugraph

#endif  // CIUGRAPH_NORMALIZE_HPP_
