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

#ifndef CIUGRAPH_LEXICON_HPP_
#define CIUGRAPH_LEXICON_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ciugraph/normalize.hpp"

namespace ciugraph {

// Content information units are numbered 1..23.
using CiuId = int;
inline constexpr CiuId kMinCiuId = 1;
inline constexpr CiuId kMaxCiuId = 23;

struct CiuInfo {
  CiuId id = 0;
  std::string label;        // canonical name, e.g. "Boy or stool falling"
  std::string short_label;  // compact name for node rendering
};

struct MultiwordEntry {
  std::vector<std::string> tokens;  // surface forms, matched in-sentence
  std::vector<CiuId> cius;          // emission order
  std::string canonical;            // groups spelling variants of one entry
};

// Word -> ordered CIU list dictionary. Immutable after load; shareable
// across threads.
struct Lexicon {
  std::string version;
  std::vector<CiuInfo> cius;                        // indexed lookup below
  std::map<std::string, std::vector<CiuId>> entries;  // verbatim keys
  std::vector<MultiwordEntry> multiword;
  std::set<std::string> low_precision;  // words excluded unless opted in
  std::map<std::string, std::string> notes;  // word -> provenance note

  // Lookup index with hyphen-folded keys, built at load.
  std::map<std::string, std::vector<CiuId>> folded_index;

  const CiuInfo* find_ciu(CiuId id) const;
  std::string label_of(CiuId id) const;
  std::string short_label_of(CiuId id) const;
};

struct CiuMatch {
  CiuId ciu = 0;
  int token_index = 0;
  int sentence_index = 0;
  std::string matched_word;
};

struct CiuSequence {
  std::string transcript_id;
  std::vector<CiuMatch> matches;

  std::vector<CiuId> ids() const;
};

struct ExtractOptions {
  bool include_low_precision = false;
};

// Parses and validates a lexicon document:
// {"version": "...", "cius": [{"id":1,"label":"Boy"},...],
//  "entries": {"boy":[1], ...},
//  "multiword": [{"tokens":["does","not","see"],"cius":[23]}, ...],
//  "low_precision": ["three"],
//  "notes": [{"word":"get","reason":"..."}]}
// Only "entries" is required. Throws SchemaError / UnknownCiuId /
// ConflictingEntry.
Lexicon load_lexicon(std::string_view json_text);

// The shipped dictionary (all 23 CIUs, ~220 word entries).
const Lexicon& default_lexicon();

// Left-to-right scan: in-sentence multiword entries first (longest match on
// surfaces, hyphen-folded), then single-word lookup surface-then-lemma, then
// the hyphen-split alternates if the joined form found nothing. Each hit
// emits its entry's CIU list in stored order, minus any CIU already emitted
// in the same sentence.
CiuSequence extract_cius(const std::vector<Token>& tokens,
                         const Lexicon& lexicon,
                         const ExtractOptions& options = {});

}  // namespace ciugraph

#endif  // CIUGRAPH_LEXICON_HPP_
