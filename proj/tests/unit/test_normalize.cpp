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

#include <doctest.h>

#include <random>

#include "ciugraph/chat.hpp"
#include "ciugraph/errors.hpp"
#include "ciugraph/lexicon.hpp"
#include "ciugraph/normalize.hpp"

using namespace ciugraph;

namespace {

std::vector<std::string> surfaces_of(const std::string& text) {
  Transcript t = parse_plain(text);
  std::vector<std::string> out;
  for (const Token& tok : normalize(t, default_lemma_rules()))
    out.push_back(tok.surface);
  return out;
}

}  // namespace

TEST_CASE("normalize drops punctuation and possessive clitics") {
  auto s = surfaces_of("I see mom's doing the dishes.");
  CHECK(s == std::vector<std::string>{"i", "see", "mom", "doing", "the",
                                      "dishes"});
}

TEST_CASE("normalize expands n't and strips typographic quotes") {
  auto s = surfaces_of("“Shh, don’t tell anybody.”");
  CHECK(s == std::vector<std::string>{"shh", "do", "not", "tell", "anybody"});
}

TEST_CASE("normalize of empty input is empty") {
  CHECK(surfaces_of("").empty());
}

TEST_CASE("gonna expands to going to") {
  auto s = surfaces_of("kid's gonna fall.");
  CHECK(s == std::vector<std::string>{"kid", "going", "to", "fall"});
}

TEST_CASE("numerals and symbols vanish") {
  auto s = surfaces_of("there are 3 cookies + 2 plates!");
  CHECK(s == std::vector<std::string>{"there", "are", "cookies", "plates"});
}

TEST_CASE("hyphenated words emit a joined form with alternate parts") {
  Transcript t = parse_plain("she wears high-heels.");
  auto tokens = normalize(t, default_lemma_rules());
  REQUIRE(tokens.size() == 3);
  const Token& hh = tokens[2];
  CHECK(hh.surface == "highheels");
  REQUIRE(hh.alt_surfaces.size() == 2);
  CHECK(hh.alt_surfaces[0] == "high");
  CHECK(hh.alt_surfaces[1] == "heels");
  CHECK(tokens[1].alt_surfaces.empty());
}

TEST_CASE("sentence and token indexing") {
  Transcript t = parse_plain("A boy. A girl falls.");
  auto tokens = normalize(t, default_lemma_rules());
  REQUIRE(tokens.size() == 5);
  CHECK(tokens[0].sentence_index == 0);
  CHECK(tokens[1].sentence_index == 0);
  CHECK(tokens[2].sentence_index == 1);
  for (size_t i = 1; i < tokens.size(); ++i)
    CHECK(tokens[i].token_index > tokens[i - 1].token_index);
}

TEST_CASE("normalize never emits empty tokens") {
  for (const char* text :
       {"... ---", "a - b", "'' “”", "don't don't.", "x-"}) {
    Transcript t = parse_plain(text);
    for (const Token& tok : normalize(t, default_lemma_rules())) {
      CHECK(!tok.surface.empty());
      CHECK(!tok.lemma.empty());
    }
  }
}

TEST_CASE("lemmatize handles the rule families") {
  const LemmaRules& rules = default_lemma_rules();
  CHECK(lemmatize("dishes", rules) == "dish");
  CHECK(lemmatize("noticing", rules) == "notice");
  CHECK(lemmatize("boy", rules) == "boy");
  CHECK(lemmatize("ladies", rules) == "lady");
  CHECK(lemmatize("glasses", rules) == "glass");
  CHECK(lemmatize("plates", rules) == "plate");
  CHECK(lemmatize("tries", rules) == "try");
  CHECK(lemmatize("tried", rules) == "try");
  CHECK(lemmatize("getting", rules) == "get");
  CHECK(lemmatize("telling", rules) == "tell");
  CHECK(lemmatize("falling", rules) == "fall");
  CHECK(lemmatize("taking", rules) == "take");
  CHECK(lemmatize("rinses", rules) == "rinse");
  CHECK(lemmatize("collapsing", rules) == "collapse");
  CHECK(lemmatize("toppling", rules) == "topple");
  CHECK(lemmatize("focusing", rules) == "focus");
  CHECK(lemmatize("washed", rules) == "wash");
  CHECK(lemmatize("children", rules) == "child");
  CHECK(lemmatize("fell", rules) == "fall");
}

TEST_CASE("every golden-transcript inflection the lexicon needs") {
  const LemmaRules& rules = default_lemma_rules();
  CHECK(lemmatize("kids", rules) == "kid");
  CHECK(lemmatize("dishes", rules) == "dish");
  CHECK(lemmatize("cookies", rules) == "cookie");
  CHECK(lemmatize("telling", rules) == "tell");
  CHECK(lemmatize("noticing", rules) == "notice");
  CHECK(lemmatize("getting", rules) == "get");
}

TEST_CASE("every lexicon entry word matches itself through the pipeline") {
  // Surface lookup runs before lemma lookup, so an entry word used verbatim
  // must always produce exactly its emission list ("dressing" stays 16 even
  // though its lemma "dress" maps to 2 and 3).
  const Lexicon& lex = default_lexicon();
  ExtractOptions options;
  options.include_low_precision = true;
  for (const auto& [word, ids] : lex.entries) {
    Transcript t = parse_plain(word + " .");
    auto tokens = normalize(t, default_lemma_rules());
    CiuSequence seq = extract_cius(tokens, lex, options);
    INFO("entry '", word, "'");
    CHECK(seq.ids() == ids);
  }
}

TEST_CASE("lemmatize is idempotent over a large sample") {
  const LemmaRules& rules = default_lemma_rules();
  // 10k pseudo-words from syllables plus inflection endings, seeded.
  std::mt19937 rng(42);
  const char* onsets[] = {"b", "ch", "d", "f", "g", "gr", "k", "l",
                          "m", "n", "p", "r", "s", "st", "t", "w"};
  const char* nuclei[] = {"a", "e", "i", "o", "u", "ai", "ee", "oo"};
  const char* codas[] = {"", "b", "d", "g", "k", "l", "m", "n", "p", "r",
                         "s", "t", "sh", "ch"};
  const char* endings[] = {"", "s", "es", "ies", "ing", "ed", "ied", "sses"};
  for (int i = 0; i < 10000; ++i) {
    std::string w;
    int syllables = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < syllables; ++k) {
      w += onsets[rng() % 16];
      w += nuclei[rng() % 8];
      w += codas[rng() % 14];
    }
    w += endings[rng() % 8];
    std::string once = lemmatize(w, rules);
    std::string twice = lemmatize(once, rules);
    INFO(w, " -> ", once, " -> ", twice);
    CHECK(once == twice);
  }
}

TEST_CASE("lemma rules load from JSON and reject malformed documents") {
  LemmaRules rules = load_lemma_rules(
      R"({"irregulars": {"ran": "run"}, "suffix_rules": [["s", ""]],
          "protected": ["bus"]})");
  CHECK(lemmatize("ran", rules) == "run");
  CHECK(lemmatize("cats", rules) == "cat");
  CHECK(lemmatize("bus", rules) == "bus");
  CHECK_THROWS_AS(load_lemma_rules("not json"), SchemaError);
  CHECK_THROWS_AS(load_lemma_rules(R"({"suffix_rules": [["a"]]})"),
                  SchemaError);
}
