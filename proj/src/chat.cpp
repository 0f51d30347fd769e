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

#include "ciugraph/chat.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ciugraph/errors.hpp"

namespace ciugraph {
namespace {

std::string_view skip_bom(std::string_view s) {
  if (s.size() >= 3 && static_cast<unsigned char>(s[0]) == 0xEF &&
      static_cast<unsigned char>(s[1]) == 0xBB &&
      static_cast<unsigned char>(s[2]) == 0xBF) {
    s.remove_prefix(3);
  }
  return s;
}

std::vector<std::string> split_lines(std::string_view s) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : s) {
    if (c == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) {
    if (cur.back() == '\r') cur.pop_back();
    lines.push_back(cur);
  }
  return lines;
}

std::string collapse_whitespace(const std::string& s) {
  std::string out;
  bool in_space = true;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      in_space = true;
    } else {
      if (in_space && !out.empty()) out.push_back(' ');
      out.push_back(c);
      in_space = false;
    }
  }
  return out;
}

// Removes time-alignment bullets. Two encodings occur in the wild: the NAK
// control byte (0x15) delimiting "start_end", and a literal UTF-8 bullet.
std::string strip_bullets(const std::string& s) {
  static const std::string kBullet = "\xE2\x80\xA2";  // U+2022
  std::string out;
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] == '\x15') {
      size_t end = s.find('\x15', i + 1);
      i = (end == std::string::npos) ? s.size() : end + 1;
      continue;
    }
    if (s.compare(i, kBullet.size(), kBullet) == 0) {
      size_t end = s.find(kBullet, i + kBullet.size());
      i = (end == std::string::npos) ? s.size() : end + kBullet.size();
      continue;
    }
    out.push_back(s[i]);
    ++i;
  }
  return out;
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

bool is_retrace_marker(const std::string& raw_inner) {
  std::string code = trim(raw_inner);
  if (code == "..." || code == "..") return true;
  return !code.empty() &&
         std::all_of(code.begin(), code.end(), [](char c) { return c == '/'; });
}

// Drops angle brackets and resolves (short)enings: "(be)cause" -> "because".
std::string clean_token(const std::string& tok) {
  std::string out;
  for (char c : tok) {
    if (c == '<' || c == '>' || c == '(' || c == ')') continue;
    out.push_back(c);
  }
  return out;
}

// Strips markup from one tier line. Retracing markers erase the material
// they scope: an explicit <...> group when present, otherwise the restarted
// phrase is located by matching the word that follows the marker (speakers
// restart from the repaired word), falling back to the single preceding
// word.
std::string strip_markup(const std::string& raw) {
  std::string text = strip_bullets(raw);

  std::vector<std::string> tokens;
  {
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
  }

  std::vector<std::string> kept;
  // Start index in `kept` of the most recent, still-eligible <...> group.
  std::ptrdiff_t group_start = -1;
  bool group_open = false;

  for (size_t i = 0; i < tokens.size(); ++i) {
    const std::string& tok = tokens[i];

    if (!tok.empty() && tok[0] == '[') {
      std::string code = tok;
      while (code.find(']') == std::string::npos && i + 1 < tokens.size()) {
        code += " " + tokens[++i];
      }
      size_t close = code.find(']');
      std::string inner = code.substr(
          1, close == std::string::npos ? std::string::npos : close - 1);
      if (is_retrace_marker(inner)) {
        if (group_start >= 0 && !group_open) {
          kept.resize(static_cast<size_t>(group_start));
        } else if (!kept.empty()) {
          std::string repair;
          if (i + 1 < tokens.size() && tokens[i + 1][0] != '[' &&
              tokens[i + 1][0] != '&') {
            repair = clean_token(tokens[i + 1]);
          }
          auto it = kept.end();
          if (!repair.empty()) {
            it = std::find(kept.rbegin(), kept.rend(), repair).base();
            if (it != kept.begin()) --it;  // base() points one past the hit
          }
          if (!repair.empty() &&
              std::find(kept.begin(), kept.end(), repair) != kept.end()) {
            kept.erase(it, kept.end());
          } else {
            kept.pop_back();
          }
        }
      }
      group_start = -1;
      continue;
    }

    if (!tok.empty() && tok[0] == '&') continue;  // fillers &uh, &-um, &=laughs
    if (tok == "xxx" || tok == "yyy") continue;   // non-word tokens

    bool opens = tok.front() == '<';
    bool closes = tok.back() == '>';
    std::string cleaned = clean_token(tok);
    if (opens) {
      group_start = static_cast<std::ptrdiff_t>(kept.size());
      group_open = true;
    }
    if (closes) group_open = false;
    if (!opens && !closes && !group_open) {
      // A plain word invalidates any completed group behind it.
      if (group_start >= 0 &&
          group_start < static_cast<std::ptrdiff_t>(kept.size()))
        group_start = -1;
    }
    if (!cleaned.empty()) kept.push_back(cleaned);
  }

  std::string joined;
  for (const auto& t : kept) {
    if (!joined.empty()) joined.push_back(' ');
    joined += t;
  }
  return collapse_whitespace(joined);
}

}  // namespace

Transcript parse_chat(std::string_view bytes, const ChatOptions& options) {
  Transcript out;
  out.source_format = SourceFormat::kChat;

  const std::vector<std::string> lines = split_lines(skip_bom(bytes));

  // Join tier lines with their tab-indented continuations first.
  struct TierLine {
    std::string code;
    std::string text;
  };
  std::vector<TierLine> tiers;
  bool have_open_tier = false;
  bool saw_participant_tier = false;

  for (const std::string& line : lines) {
    if (line.empty()) {
      have_open_tier = false;
      continue;
    }
    char first = line[0];
    if (first == '@' || first == '%') {
      have_open_tier = false;
      continue;
    }
    if (first == '*') {
      size_t colon = line.find(':');
      if (colon == std::string::npos) {
        have_open_tier = false;
        continue;
      }
      TierLine t;
      t.code = line.substr(1, colon - 1);
      t.text = line.substr(colon + 1);
      tiers.push_back(std::move(t));
      have_open_tier = true;
      if (tiers.back().code == options.participant_tier)
        saw_participant_tier = true;
      continue;
    }
    if (first == '\t' && have_open_tier) {
      tiers.back().text += " " + line;
      continue;
    }
    have_open_tier = false;
  }

  if (!saw_participant_tier) {
    throw MalformedChat("no *" + options.participant_tier +
                        ": tier found; wrong file or speaker code?");
  }

  int index = 0;
  for (const auto& t : tiers) {
    if (t.code != options.participant_tier) continue;
    std::string text = strip_markup(t.text);
    if (text.empty()) continue;  // never store empty utterances
    Utterance u;
    u.index = index++;
    u.raw_text = std::move(text);
    u.speaker = t.code;
    out.utterances.push_back(std::move(u));
  }
  return out;
}

Transcript parse_plain(std::string_view bytes) {
  Transcript out;
  out.source_format = SourceFormat::kPlainText;

  std::string_view s = skip_bom(bytes);
  std::string cur;
  int index = 0;
  bool pending = false;  // saw a terminator, closing quotes may follow
  auto flush = [&]() {
    pending = false;
    std::string text = collapse_whitespace(cur);
    cur.clear();
    if (text.empty()) return;
    Utterance u;
    u.index = index++;
    u.raw_text = std::move(text);
    u.speaker = "PAR";
    out.utterances.push_back(std::move(u));
  };
  // Closing quotes, brackets and whitespace after a terminator stay with
  // the sentence they end ("anybody.”" is one utterance).
  auto closes_sentence = [](char c) {
    return c == '"' || c == '\'' || c == ')' || c == ']' ||
           static_cast<unsigned char>(c) >= 0x80 ||
           std::isspace(static_cast<unsigned char>(c));
  };
  for (char c : s) {
    if (pending && !closes_sentence(c)) flush();
    cur.push_back(c);
    if (c == '.' || c == '?' || c == '!') pending = true;
  }
  flush();
  return out;
}

}  // namespace ciugraph
