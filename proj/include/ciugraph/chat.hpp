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

#ifndef CIUGRAPH_CHAT_HPP_
#define CIUGRAPH_CHAT_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace ciugraph {

enum class SourceFormat { kChat, kPlainText };

struct Utterance {
  int index = 0;            // 0-based, consecutive
  std::string raw_text;     // markup-stripped, never empty
  std::string speaker;      // tier code, e.g. "PAR"
};

struct Transcript {
  std::string id;
  std::vector<Utterance> utterances;  // file order
  SourceFormat source_format = SourceFormat::kPlainText;
};

struct ChatOptions {
  // Speaker tier whose utterances are kept. Everything else (investigator
  // prompts, dependent tiers, headers) is dropped.
  std::string participant_tier = "PAR";
};

// Parses a CHAT-format document. Keeps participant-tier utterances in file
// order, joins tab-continuation lines, and strips the supported markup
// subset: retracing/repetition bracket groups together with the material
// they scope, all other [...] codes wholesale, &-prefixed fillers, xxx/yyy
// non-words, parenthesized shortenings (keeping the enclosed letters), and
// trailing time-alignment bullets.
// Throws MalformedChat when no participant tier line is present at all.
Transcript parse_chat(std::string_view bytes, const ChatOptions& options = {});

// Splits a plain-text document into sentence utterances on . ? ! with the
// terminator kept. Empty input yields a transcript with zero utterances.
Transcript parse_plain(std::string_view bytes);

}  // namespace ciugraph

#endif  // CIUGRAPH_CHAT_HPP_
