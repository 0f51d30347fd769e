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

#include "ciugraph/normalize.hpp"

#include <algorithm>
#include <cctype>

#include <json.hpp>

#include "ciugraph/defaults.hpp"
#include "ciugraph/errors.hpp"

namespace ciugraph {
namespace {

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

bool has_vowel(const std::string& s) {
  return std::any_of(s.begin(), s.end(), is_vowel);
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Consonant-vowel-consonant tail, final consonant not w/x/y/s. The classic
// cue that the stem lost a silent e (tak-ing, secur-ed); vowel+s stems
// (focus-ing) keep their bare form.
bool cvc_tail(const std::string& s) {
  if (s.size() < 3) return false;
  char a = s[s.size() - 3], b = s[s.size() - 2], c = s[s.size() - 1];
  return !is_vowel(a) && is_vowel(b) && !is_vowel(c) && c != 'w' && c != 'x' &&
         c != 'y' && c != 's';
}

// Post-processing for stems produced by stripping "ing"/"ed".
std::string fix_verb_stem(std::string stem) {
  size_t n = stem.size();
  if (n >= 2 && stem[n - 1] == stem[n - 2] &&
      !is_vowel(stem[n - 1])) {
    char dbl = stem[n - 1];
    if (dbl == 'l' || dbl == 's' || dbl == 'z') return stem;  // tell, pass, buzz
    stem.pop_back();  // gett -> get, tipp -> tip
    return stem;
  }
  char last = stem.empty() ? '\0' : stem.back();
  char prev = stem.size() >= 2 ? stem[stem.size() - 2] : '\0';
  if (last == 'c' || last == 'v' || last == 'z' || last == 'u') {
    stem.push_back('e');  // notic-e, wav-e, realiz-e, continu-e
  } else if (last == 'l' && prev != '\0' && !is_vowel(prev) && prev != 'l') {
    stem.push_back('e');  // giggl-e, handl-e, toppl-e
  } else if (last == 's' && prev != '\0' && !is_vowel(prev)) {
    stem.push_back('e');  // collaps-e, rins-e
  } else if (cvc_tail(stem)) {
    stem.push_back('e');  // tak-e, secur-e, ignor-e
  }
  return stem;
}

bool rule_applies(const std::string& word, const std::string& suffix,
                  const std::string& replacement, std::string* stem_out) {
  if (!ends_with(word, suffix)) return false;
  std::string stem = word.substr(0, word.size() - suffix.size());
  size_t min_stem = 2;
  if (suffix == "ing" || suffix == "ed") min_stem = 3;
  if (stem.size() < min_stem) return false;
  if (!has_vowel(stem) && !has_vowel(replacement)) return false;
  if (suffix == "es") {
    // Only sibilant stems pluralize with bare -es; everything else keeps
    // its e and goes through the -s rule instead (plates, rinses).
    if (!(ends_with(stem, "x") || ends_with(stem, "ch") ||
          ends_with(stem, "sh") || ends_with(stem, "ss") ||
          ends_with(stem, "zz")))
      return false;
  }
  if (suffix == "s") {
    if (ends_with(word, "ss") || ends_with(word, "us") || ends_with(word, "is"))
      return false;
  }
  *stem_out = std::move(stem);
  return true;
}

// Multi-byte punctuation folded before tokenization. Curly apostrophes
// become plain apostrophes so clitic handling sees them; other typographic
// marks become spaces.
void fold_unicode_punct(std::string* s) {
  struct Fold {
    std::string_view from;
    std::string_view to;
  };
  static const Fold kFolds[] = {
      {"\xE2\x80\x99", "'"},   // right single quote
      {"\xE2\x80\x98", " "},   // left single quote
      {"\xE2\x80\x9C", " "},   // left double quote
      {"\xE2\x80\x9D", " "},   // right double quote
      {"\xE2\x80\x93", " "},   // en dash
      {"\xE2\x80\x94", " "},   // em dash
      {"\xE2\x80\xA6", " "},   // ellipsis
      {"\xE2\x80\xA2", " "},   // bullet
  };
  std::string out;
  out.reserve(s->size());
  size_t i = 0;
  while (i < s->size()) {
    bool matched = false;
    for (const auto& f : kFolds) {
      if (s->compare(i, f.from.size(), f.from) == 0) {
        out += f.to;
        i += f.from.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    unsigned char c = static_cast<unsigned char>((*s)[i]);
    if (c >= 0x80) {
      out.push_back(' ');  // any other non-ASCII byte is dropped
    } else {
      out.push_back(static_cast<char>(c));
    }
    ++i;
  }
  *s = std::move(out);
}

// Expands or drops clitics on a raw lowercase word (may still hold
// punctuation other than the apostrophe). Returns 1..2 words.
std::vector<std::string> expand_clitics(const std::string& word) {
  if (word == "gonna") return {"going", "to"};
  if (word == "wanna") return {"want", "to"};
  if (word == "can't" || word == "cant'") return {"can", "not"};
  if (word == "won't") return {"will", "not"};
  if (word == "shan't") return {"shall", "not"};
  if (ends_with(word, "n't") && word.size() > 3)
    return {word.substr(0, word.size() - 3), "not"};
  for (std::string_view tail : {"'s", "'re", "'ve", "'ll", "'d", "'m"}) {
    if (ends_with(word, tail) && word.size() > tail.size())
      return {word.substr(0, word.size() - tail.size())};
  }
  return {word};
}

std::string strip_punct(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (std::isalpha(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

}  // namespace

namespace {

std::string lemmatize_once(const std::string& surface,
                           const LemmaRules& rules) {
  if (rules.protected_words.count(surface)) return surface;
  auto irr = rules.irregulars.find(surface);
  if (irr != rules.irregulars.end()) return irr->second;
  for (const auto& [suffix, replacement] : rules.suffix_rules) {
    std::string stem;
    if (!rule_applies(surface, suffix, replacement, &stem)) continue;
    std::string out = stem + replacement;
    if (suffix == "ing" || suffix == "ed") out = fix_verb_stem(std::move(out));
    return out;
  }
  return surface;
}

}  // namespace

std::string lemmatize(const std::string& surface, const LemmaRules& rules) {
  // Iterate to a fixed point so stacked inflections ("weres", "groosings")
  // cannot leave a half-reduced form; this is what makes the operation
  // idempotent. Each pass shortens the word or resolves one irregular, so
  // the loop ends quickly.
  std::string word = surface;
  for (int pass = 0; pass < 8; ++pass) {
    std::string next = lemmatize_once(word, rules);
    if (next == word) return word;
    word = std::move(next);
  }
  return word;
}

std::vector<Token> normalize(const Transcript& transcript,
                             const LemmaRules& rules) {
  std::vector<Token> out;
  int token_index = 0;

  for (const Utterance& utt : transcript.utterances) {
    std::string text = utt.raw_text;
    fold_unicode_punct(&text);
    std::transform(text.begin(), text.end(), text.begin(), [](unsigned char c) {
      return static_cast<char>(std::tolower(c));
    });

    // Whitespace-split, then per-word clitic expansion and punctuation
    // stripping.
    std::vector<std::string> raw_words;
    {
      std::string cur;
      for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
          if (!cur.empty()) raw_words.push_back(std::move(cur));
          cur.clear();
        } else {
          cur.push_back(c);
        }
      }
      if (!cur.empty()) raw_words.push_back(std::move(cur));
    }

    for (const std::string& raw : raw_words) {
      // Trim outer punctuation so clitic suffixes sit at the word end
      // ("anybody.'" -> "anybody").
      std::string word = raw;
      size_t b = word.find_first_of("abcdefghijklmnopqrstuvwxyz");
      if (b == std::string::npos) continue;
      size_t e = word.find_last_of("abcdefghijklmnopqrstuvwxyz");
      word = word.substr(b, e - b + 1);

      for (const std::string& piece : expand_clitics(word)) {
        // Hyphenated words: joined form carries the index, parts ride as
        // alternates.
        std::vector<std::string> parts;
        bool hyphenated = false;
        {
          std::string cur;
          for (char c : piece) {
            if (c == '-') {
              if (!cur.empty()) parts.push_back(cur);
              cur.clear();
              hyphenated = true;
            } else {
              cur.push_back(c);
            }
          }
          if (!cur.empty()) parts.push_back(cur);
        }
        std::string joined = strip_punct(piece);
        if (joined.empty()) continue;

        Token tok;
        tok.surface = joined;
        tok.lemma = lemmatize(joined, rules);
        tok.sentence_index = utt.index;
        tok.token_index = token_index;
        if (hyphenated && parts.size() >= 2) {
          for (const std::string& p : parts) {
            std::string clean = strip_punct(p);
            if (clean.empty()) continue;
            tok.alt_surfaces.push_back(clean);
            tok.alt_lemmas.push_back(lemmatize(clean, rules));
          }
        }
        out.push_back(std::move(tok));
        ++token_index;
      }
    }
  }
  return out;
}

const LemmaRules& default_lemma_rules() {
  static const LemmaRules rules = load_lemma_rules(defaults::lemma_rules_json());
  return rules;
}

LemmaRules load_lemma_rules(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("lemma rules: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("lemma rules: expected an object");

  LemmaRules rules;
  try {
    if (doc.contains("irregulars")) {
      for (auto& [k, v] : doc.at("irregulars").items())
        rules.irregulars[k] = v.get<std::string>();
    }
    if (doc.contains("suffix_rules")) {
      for (const auto& pair : doc.at("suffix_rules")) {
        if (!pair.is_array() || pair.size() != 2)
          throw SchemaError("lemma rules: suffix_rules entries are [pat, repl]");
        rules.suffix_rules.emplace_back(pair[0].get<std::string>(),
                                        pair[1].get<std::string>());
      }
    }
    if (doc.contains("protected")) {
      for (const auto& w : doc.at("protected"))
        rules.protected_words.insert(w.get<std::string>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("lemma rules: ") + e.what());
  }
  return rules;
}

}  // namespace ciugraph
