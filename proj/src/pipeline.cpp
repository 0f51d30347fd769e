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

#include "ciugraph/pipeline.hpp"

#include <json.hpp>

#include "ciugraph/errors.hpp"
#include "ciugraph/graph.hpp"

namespace ciugraph {

CiuSequence run_extraction(const Transcript& transcript,
                           const PipelineConfig& config) {
  std::vector<Token> tokens = normalize(transcript, *config.lemma_rules);
  CiuSequence seq = extract_cius(tokens, *config.lexicon, config.extract);
  seq.transcript_id = transcript.id;
  return seq;
}

FeatureVector features_of_sequence(const CiuSequence& seq,
                                   const PipelineConfig& config) {
  SpatioSemanticGraph g = build_graph(seq, *config.coordinates);
  QuadrantGraph q = build_quadrant_graph(seq, *config.coordinates);
  FeatureVector fv = compute_features(g, q);
  fv.transcript_id = seq.transcript_id;
  return fv;
}

FeatureVector run_pipeline(const Transcript& transcript,
                           const PipelineConfig& config) {
  return features_of_sequence(run_extraction(transcript, config), config);
}

std::string sequence_to_json(const CiuSequence& seq, const Lexicon& lexicon) {
  nlohmann::json doc;
  doc["transcript_id"] = seq.transcript_id;
  doc["matches"] = nlohmann::json::array();
  for (const CiuMatch& m : seq.matches) {
    doc["matches"].push_back({{"ciu", m.ciu},
                              {"label", lexicon.label_of(m.ciu)},
                              {"word", m.matched_word},
                              {"token_index", m.token_index},
                              {"sentence_index", m.sentence_index}});
  }
  return doc.dump(2) + "\n";
}

CiuSequence sequence_from_json(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("sequence: invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("matches"))
    throw SchemaError("sequence: expected an object with \"matches\"");
  CiuSequence seq;
  try {
    seq.transcript_id = doc.value("transcript_id", "");
    for (const auto& m : doc.at("matches")) {
      CiuMatch match;
      match.ciu = m.at("ciu").get<int>();
      if (match.ciu < kMinCiuId || match.ciu > kMaxCiuId)
        throw UnknownCiuId("sequence: CIU id " + std::to_string(match.ciu) +
                           " out of range");
      match.matched_word = m.value("word", "");
      match.token_index = m.value("token_index", 0);
      match.sentence_index = m.value("sentence_index", 0);
      seq.matches.push_back(std::move(match));
    }
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("sequence: ") + e.what());
  }
  return seq;
}

}  // namespace ciugraph
