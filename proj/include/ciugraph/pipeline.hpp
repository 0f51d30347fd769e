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

#ifndef CIUGRAPH_PIPELINE_HPP_
#define CIUGRAPH_PIPELINE_HPP_

#include <string>
#include <string_view>

#include "ciugraph/features.hpp"
#include "ciugraph/lexicon.hpp"
#include "ciugraph/normalize.hpp"
#include "ciugraph/spatial.hpp"

namespace ciugraph {

// Shared, read-only stage configuration.
struct PipelineConfig {
  const Lexicon* lexicon = &default_lexicon();
  const CoordinateTable* coordinates = &default_coordinates();
  const LemmaRules* lemma_rules = &default_lemma_rules();
  ExtractOptions extract;
  ChatOptions chat;
};

CiuSequence run_extraction(const Transcript& transcript,
                           const PipelineConfig& config);

FeatureVector features_of_sequence(const CiuSequence& seq,
                                   const PipelineConfig& config);

// transcript -> tokens -> CIU sequence -> graphs -> features.
FeatureVector run_pipeline(const Transcript& transcript,
                           const PipelineConfig& config);

// Sequence JSON used by the extract/features/render commands:
// {"transcript_id": "...", "matches": [{"ciu":3,"label":"Woman",
//   "word":"mom","token_index":2,"sentence_index":0}, ...]}
std::string sequence_to_json(const CiuSequence& seq, const Lexicon& lexicon);
CiuSequence sequence_from_json(std::string_view json_text);

}  // namespace ciugraph

#endif  // CIUGRAPH_PIPELINE_HPP_
