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

#include "ciugraph/lexicon.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "ciugraph/defaults.hpp"
#include "ciugraph/errors.hpp"

namespace ciugraph {
namespace {

std::string fold_hyphens(const std::string& word) {
  std::string out;
  for (char c : word) {
    if (c != '-') out.push_back(c);
  }
  return out;
}

void check_ciu_list(const std::string& where, const std::vector<CiuId>& ids,
                    const std::set<CiuId>& known) {
  std::set<CiuId> seen;
  for (CiuId id : ids) {
    if (id < kMinCiuId || id > kMaxCiuId || !known.count(id))
      throw UnknownCiuId(where + ": CIU id " + std::to_string(id) +
                         " is not in the inventory");
    if (!seen.insert(id).second)
      throw ConflictingEntry(where + ": CIU id " + std::to_string(id) +
                             " repeated in one emission list");
  }
}

std::vector<CiuId> parse_id_list(const nlohmann::json& arr,
                                 const std::string& where) {
  if (!arr.is_array() || arr.empty())
    throw SchemaError(where + ": expected a non-empty array of CIU ids");
  std::vector<CiuId> ids;
  for (const auto& v : arr) {
    if (!v.is_number_integer())
      throw SchemaError(where + ": CIU ids must be integers");
    ids.push_back(v.get<int>());
  }
  return ids;
}

}  // namespace

const CiuInfo* Lexicon::find_ciu(CiuId id) const {
  for (const auto& c : cius) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

std::string Lexicon::label_of(CiuId id) const {
  const CiuInfo* c = find_ciu(id);
  return c ? c->label : "CIU " + std::to_string(id);
}

std::string Lexicon::short_label_of(CiuId id) const {
  const CiuInfo* c = find_ciu(id);
  if (c && !c->short_label.empty()) return c->short_label;
  if (c && !c->label.empty()) return c->label;
  return "CIU" + std::to_string(id);
}

std::vector<CiuId> CiuSequence::ids() const {
  std::vector<CiuId> out;
  out.reserve(matches.size());
  for (const auto& m : matches) out.push_back(m.ciu);
  return out;
}

Lexicon load_lexicon(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("lexicon: invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("entries"))
    throw SchemaError("lexicon: expected an object with an \"entries\" map");

  Lexicon lex;
  lex.version = doc.value("version", "");

  std::set<CiuId> known;
  if (doc.contains("cius")) {
    for (const auto& c : doc.at("cius")) {
      CiuInfo info;
      if (!c.is_object() || !c.contains("id"))
        throw SchemaError("lexicon: cius entries need an \"id\"");
      info.id = c.at("id").get<int>();
      if (info.id < kMinCiuId || info.id > kMaxCiuId)
        throw UnknownCiuId("lexicon: CIU id " + std::to_string(info.id) +
                           " out of range");
      info.label = c.value("label", "CIU " + std::to_string(info.id));
      info.short_label = c.value("short", "");
      if (!known.insert(info.id).second)
        throw ConflictingEntry("lexicon: duplicate CIU id " +
                               std::to_string(info.id));
      lex.cius.push_back(std::move(info));
    }
  } else {
    // Minimal documents get the full numeric inventory.
    for (CiuId id = kMinCiuId; id <= kMaxCiuId; ++id) {
      known.insert(id);
      lex.cius.push_back({id, "CIU " + std::to_string(id), ""});
    }
  }

  const auto& entries = doc.at("entries");
  if (!entries.is_object())
    throw SchemaError("lexicon: \"entries\" must be a word -> [ids] map");
  for (auto& [word, arr] : entries.items()) {
    if (word.empty() || word.find(' ') != std::string::npos)
      throw SchemaError("lexicon: entry key '" + word +
                        "' must be a single word");
    auto ids = parse_id_list(arr, "entry '" + word + "'");
    check_ciu_list("entry '" + word + "'", ids, known);
    lex.entries[word] = std::move(ids);
  }

  if (doc.contains("multiword")) {
    std::map<std::vector<std::string>, std::vector<CiuId>> seen_seqs;
    for (const auto& m : doc.at("multiword")) {
      if (!m.is_object() || !m.contains("tokens") || !m.contains("cius"))
        throw SchemaError("lexicon: multiword entries need tokens and cius");
      MultiwordEntry entry;
      for (const auto& t : m.at("tokens"))
        entry.tokens.push_back(fold_hyphens(t.get<std::string>()));
      if (entry.tokens.size() < 2)
        throw SchemaError("lexicon: multiword entries need >= 2 tokens");
      entry.cius = parse_id_list(m.at("cius"), "multiword entry");
      check_ciu_list("multiword entry", entry.cius, known);
      entry.canonical = m.value("canonical", "");
      if (entry.canonical.empty()) {
        for (const auto& t : entry.tokens) {
          if (!entry.canonical.empty()) entry.canonical += " ";
          entry.canonical += t;
        }
      }
      auto it = seen_seqs.find(entry.tokens);
      if (it != seen_seqs.end() && it->second != entry.cius)
        throw ConflictingEntry("lexicon: multiword token sequence repeated "
                               "with a different emission list");
      seen_seqs[entry.tokens] = entry.cius;
      lex.multiword.push_back(std::move(entry));
    }
    // Longest sequences first so the scanner's first hit is the longest.
    std::stable_sort(lex.multiword.begin(), lex.multiword.end(),
                     [](const MultiwordEntry& a, const MultiwordEntry& b) {
                       return a.tokens.size() > b.tokens.size();
                     });
  }

  if (doc.contains("low_precision")) {
    for (const auto& w : doc.at("low_precision"))
      lex.low_precision.insert(w.get<std::string>());
  }
  if (doc.contains("notes")) {
    for (const auto& n : doc.at("notes")) {
      if (n.is_object() && n.contains("word") && n.contains("reason"))
        lex.notes[n.at("word").get<std::string>()] =
            n.at("reason").get<std::string>();
    }
  }

  // Hyphen-folded lookup index. A folded collision with a different
  // emission list is a conflict ("high-heels" vs a hypothetical
  // "highheels" entry must agree).
  for (const auto& [word, ids] : lex.entries) {
    std::string key = fold_hyphens(word);
    auto it = lex.folded_index.find(key);
    if (it != lex.folded_index.end() && it->second != ids)
      throw ConflictingEntry("lexicon: words '" + word +
                             "' and an existing entry fold to the same key "
                             "with different emission lists");
    lex.folded_index[key] = ids;
  }
  return lex;
}

const Lexicon& default_lexicon() {
  static const Lexicon lex = load_lexicon(defaults::lexicon_json());
  return lex;
}

namespace {

// Single-word lookup honoring the low-precision switch.
const std::vector<CiuId>* lookup_word(const Lexicon& lex,
                                      const ExtractOptions& options,
                                      const std::string& word) {
  if (!options.include_low_precision && lex.low_precision.count(word))
    return nullptr;
  auto it = lex.folded_index.find(word);
  return it == lex.folded_index.end() ? nullptr : &it->second;
}

}  // namespace

CiuSequence extract_cius(const std::vector<Token>& tokens,
                         const Lexicon& lexicon,
                         const ExtractOptions& options) {
  CiuSequence seq;

  int current_sentence = -1;
  std::set<CiuId> emitted_in_sentence;

  auto emit = [&](const std::vector<CiuId>& ids, const Token& at,
                  const std::string& word) {
    if (at.sentence_index != current_sentence) {
      current_sentence = at.sentence_index;
      emitted_in_sentence.clear();
    }
    for (CiuId id : ids) {
      if (!emitted_in_sentence.insert(id).second) continue;  // in-sentence dedup
      CiuMatch m;
      m.ciu = id;
      m.token_index = at.token_index;
      m.sentence_index = at.sentence_index;
      m.matched_word = word;
      seq.matches.push_back(std::move(m));
    }
  };

  size_t i = 0;
  while (i < tokens.size()) {
    const Token& tok = tokens[i];
    // Sentence boundaries reset dedup even when no CIU was emitted there.
    if (tok.sentence_index != current_sentence) {
      current_sentence = tok.sentence_index;
      emitted_in_sentence.clear();
    }

    // 1. Multiword entries, longest first, never across sentences.
    bool matched_multiword = false;
    for (const MultiwordEntry& mw : lexicon.multiword) {
      size_t len = mw.tokens.size();
      if (i + len > tokens.size()) continue;
      bool ok = true;
      for (size_t k = 0; k < len; ++k) {
        const Token& t = tokens[i + k];
        if (t.sentence_index != tok.sentence_index ||
            t.surface != mw.tokens[k]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      std::string phrase;
      for (size_t k = 0; k < len; ++k) {
        if (!phrase.empty()) phrase += " ";
        phrase += tokens[i + k].surface;
      }
      emit(mw.cius, tok, phrase);
      i += len;
      matched_multiword = true;
      break;
    }
    if (matched_multiword) continue;

    // 2. Single word: surface first, then lemma.
    const std::vector<CiuId>* hit = lookup_word(lexicon, options, tok.surface);
    std::string matched_word = tok.surface;
    if (!hit && tok.lemma != tok.surface) {
      hit = lookup_word(lexicon, options, tok.lemma);
      matched_word = tok.lemma;
    }
    if (hit) {
      emit(*hit, tok, matched_word);
      ++i;
      continue;
    }

    // 3. Hyphen-split alternates, only when the joined form found nothing.
    for (size_t a = 0; a < tok.alt_surfaces.size(); ++a) {
      const std::vector<CiuId>* alt_hit =
          lookup_word(lexicon, options, tok.alt_surfaces[a]);
      std::string alt_word = tok.alt_surfaces[a];
      if (!alt_hit && a < tok.alt_lemmas.size() &&
          tok.alt_lemmas[a] != tok.alt_surfaces[a]) {
        alt_hit = lookup_word(lexicon, options, tok.alt_lemmas[a]);
        alt_word = tok.alt_lemmas[a];
      }
      if (alt_hit) emit(*alt_hit, tok, alt_word);
    }
    ++i;
  }
  return seq;
}

}  // namespace ciugraph
